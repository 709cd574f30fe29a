#ifndef GSSP_RATIONAL_HPP
#define GSSP_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace gssp {

// Exact rational scalar. mpq_class keeps values canonical (reduced,
// positive denominator), which is all the Rat contract asks for.
using Rat = mpq_class;
using Int = mpz_class;

// Accepts "p/q" or a plain integer token.
inline Rat parse_rat(const std::string& tok) {
    Rat r;
    if (r.set_str(tok, 10) != 0)
        throw std::invalid_argument("bad rational token: " + tok);
    if (r.get_den() == 0)
        throw std::invalid_argument("zero denominator: " + tok);
    r.canonicalize();
    return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

}  // namespace gssp

#endif
