#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

// Under C++20 the mixed rational/integer equality templates of Boost 1.74 pick
// their own reversed candidate and recurse forever. Exact non-template
// overloads win overload resolution and short-circuit that.
namespace boost {
inline bool operator==(const rational<std::int64_t>& a, int b) { return a == rational<std::int64_t>(b); }
inline bool operator==(int b, const rational<std::int64_t>& a) { return a == rational<std::int64_t>(b); }
inline bool operator==(const rational<std::int64_t>& a, std::int64_t b) { return a == rational<std::int64_t>(b); }
inline bool operator==(std::int64_t b, const rational<std::int64_t>& a) { return a == rational<std::int64_t>(b); }
}  // namespace boost

namespace bnlab {

using i64 = std::int64_t;
using i128 = __int128;
// Witness vectors can leave 128 bits once cycle automorphisms are applied.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::rational<i64>;

enum class ErrorKind {
    NegativeRank,
    BadGonality,
    IndefiniteH,
    NotSpecial,
    NotExpectedMaximal,
    DegenerateProjection,
    BadParameters,
    UnsupportedFormat,
    Overflow,
};

const char* error_name(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_name(kind)) + ": " + what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

i128 checked_add(i128 a, i128 b);
i128 checked_sub(i128 a, i128 b);
i128 checked_mul(i128 a, i128 b);

// floor(sqrt(n)) for n >= 0, exact.
i128 isqrt(i128 n);
Int isqrt(const Int& n);
bool is_square(i128 n);

i128 floor_div(i128 a, i128 b);
i128 ceil_div(i128 a, i128 b);
i128 gcd128(i128 a, i128 b);

i128 to_i128(const Int& x);
Int to_int(i128 x);
std::string to_string(i128 x);
std::string to_string(const Rat& q);

}  // namespace bnlab
