#include "trop/perm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace trop {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size() + 1, false);
    for (int v : images_) {
        if (v < 1 || v > static_cast<int>(images_.size()) || seen[v])
            throw std::invalid_argument("not a bijection of [n]");
        seen[v] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 1);
    return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
    std::vector<int> im(images_.size());
    for (int i = 1; i <= n(); ++i) im[images_[i - 1] - 1] = i;
    return Permutation(std::move(im));
}

Permutation Permutation::operator*(const Permutation& other) const {
    std::vector<int> im(images_.size());
    for (int i = 1; i <= n(); ++i) im[i - 1] = images_[other(i) - 1];
    return Permutation(std::move(im));
}

Mask Permutation::apply(Mask m) const {
    Mask out = 0;
    for (int i = 1; m; ++i, m >>= 1)
        if (m & 1) out |= bit(images_[i - 1]);
    return out;
}

std::vector<Permutation> symmetric_group(int n) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(im);
    } while (std::next_permutation(im.begin(), im.end()));
    return out;
}

}  // namespace trop
