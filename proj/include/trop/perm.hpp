#ifndef TROP_PERM_HPP
#define TROP_PERM_HPP

#include <vector>

#include "trop/subsets.hpp"

namespace trop {

// A bijection of [n]; images[i-1] is the image of i.
class Permutation {
  public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int n);

    int n() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[i - 1]; }

    Permutation inverse() const;
    // (a*b)(i) = a(b(i))
    Permutation operator*(const Permutation& other) const;

    Mask apply(Mask m) const;

    bool operator==(const Permutation& o) const { return images_ == o.images_; }
    const std::vector<int>& images() const { return images_; }

  private:
    std::vector<int> images_;
};

// All n! permutations of [n] in lexicographic order of image vectors.
std::vector<Permutation> symmetric_group(int n);

}  // namespace trop

#endif
