#ifndef TROP_RAT_HPP
#define TROP_RAT_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace trop {

// Exact rational scalar. All kernel arithmetic is exact; there is no
// floating point anywhere in the library.
using Rat = mpq_class;
using Int = mpz_class;

using RatVec = std::vector<Rat>;
using RatMat = std::vector<std::vector<Rat>>;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p/q", "p", accepting an optional leading sign.
inline Rat parse_rat(const std::string& s) {
    try {
        Rat r(s);
        if (r.get_den() <= 0) throw std::invalid_argument("zero denominator");
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw std::runtime_error("cannot parse rational: '" + s + "'");
    }
}

inline std::string to_string(const Rat& r) { return r.get_str(); }

// A rational extended with +infinity (tropical unit).
struct TRat {
    bool inf = true;
    Rat val;

    TRat() = default;
    explicit TRat(const Rat& v) : inf(false), val(v) {}
    static TRat infinity() { return TRat(); }

    bool finite() const { return !inf; }

    friend TRat operator+(const TRat& a, const TRat& b) {
        if (a.inf || b.inf) return TRat();
        return TRat(a.val + b.val);
    }
    friend bool operator==(const TRat& a, const TRat& b) {
        if (a.inf != b.inf) return false;
        return a.inf || a.val == b.val;
    }
    friend bool operator<(const TRat& a, const TRat& b) {
        if (a.inf) return false;
        if (b.inf) return true;
        return a.val < b.val;
    }
};

}  // namespace trop

#endif
