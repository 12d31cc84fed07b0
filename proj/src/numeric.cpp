#include "bnlab/numeric.hpp"

#include <algorithm>

namespace bnlab {

const char* error_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::NegativeRank: return "NegativeRank";
        case ErrorKind::BadGonality: return "BadGonality";
        case ErrorKind::IndefiniteH: return "IndefiniteH";
        case ErrorKind::NotSpecial: return "NotSpecial";
        case ErrorKind::NotExpectedMaximal: return "NotExpectedMaximal";
        case ErrorKind::DegenerateProjection: return "DegenerateProjection";
        case ErrorKind::BadParameters: return "BadParameters";
        case ErrorKind::UnsupportedFormat: return "UnsupportedFormat";
        case ErrorKind::Overflow: return "Overflow";
    }
    return "Error";
}

i128 checked_add(i128 a, i128 b) {
    i128 r;
    if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "128-bit addition");
    return r;
}

i128 checked_sub(i128 a, i128 b) {
    i128 r;
    if (__builtin_sub_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "128-bit subtraction");
    return r;
}

i128 checked_mul(i128 a, i128 b) {
    i128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "128-bit multiplication");
    return r;
}

i128 isqrt(i128 n) {
    if (n < 0) throw Error(ErrorKind::BadParameters, "isqrt of negative");
    if (n < 2) return n;
    // Newton from above; start at a power of two past the root.
    int bits = 0;
    for (i128 t = n; t > 0; t >>= 1) ++bits;
    i128 x = i128(1) << ((bits + 1) / 2);
    while (true) {
        i128 y = (x + n / x) / 2;
        if (y >= x) break;
        x = y;
    }
    while (x * x > n) --x;
    while ((x + 1) * (x + 1) <= n) ++x;
    return x;
}

Int isqrt(const Int& n) {
    if (n < 0) throw Error(ErrorKind::BadParameters, "isqrt of negative");
    return boost::multiprecision::sqrt(n);
}

bool is_square(i128 n) {
    if (n < 0) return false;
    i128 s = isqrt(n);
    return s * s == n;
}

i128 floor_div(i128 a, i128 b) {
    i128 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

i128 ceil_div(i128 a, i128 b) { return -floor_div(-a, b); }

i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

i128 to_i128(const Int& x) {
    static const Int hi = (Int(1) << 126);
    if (x >= hi || x <= -hi) throw Error(ErrorKind::Overflow, "value exceeds 128-bit range");
    bool neg = x < 0;
    Int m = neg ? Int(-x) : x;
    i128 r = 0;
    r = static_cast<i128>(static_cast<std::uint64_t>(m >> 64)) << 64;
    r |= static_cast<i128>(static_cast<std::uint64_t>(m & Int(0xFFFFFFFFFFFFFFFFull)));
    return neg ? -r : r;
}

Int to_int(i128 x) {
    bool neg = x < 0;
    unsigned __int128 m = neg ? static_cast<unsigned __int128>(-(x + 1)) + 1 : static_cast<unsigned __int128>(x);
    Int r = Int(static_cast<std::uint64_t>(m >> 64));
    r <<= 64;
    r += Int(static_cast<std::uint64_t>(m));
    return neg ? Int(-r) : r;
}

std::string to_string(i128 x) {
    if (x == 0) return "0";
    bool neg = x < 0;
    unsigned __int128 m = neg ? static_cast<unsigned __int128>(-(x + 1)) + 1 : static_cast<unsigned __int128>(x);
    std::string s;
    while (m > 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(m % 10)));
        m /= 10;
    }
    if (neg) s.push_back('-');
    std::reverse(s.begin(), s.end());
    return s;
}

std::string to_string(const Rat& q) {
    if (q.denominator() == 1) return std::to_string(q.numerator());
    return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

}  // namespace bnlab
