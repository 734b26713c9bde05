#include "specbounds/exact.hpp"

namespace specbounds {

namespace {
int sign_of(const BigInt& x) { return x < 0 ? -1 : (x == 0 ? 0 : 1); }
}  // namespace

int compare(const RootRatio& lhs, const RootRatio& rhs) {
    int sl = (lhs.num > 0) - (lhs.num < 0);
    int sr = (rhs.num > 0) - (rhs.num < 0);
    if (sl != sr) return sl < sr ? -1 : 1;
    if (sl == 0) return 0;
    // same nonzero sign: compare num^2 / radicand through integers
    BigInt left = BigInt(lhs.num) * lhs.num * rhs.radicand;
    BigInt right = BigInt(rhs.num) * rhs.num * lhs.radicand;
    int mag = left < right ? -1 : (left == right ? 0 : 1);
    return sl > 0 ? mag : -mag;
}

int compare(const RootRatio& lhs, const BigRat& rhs) {
    int sl = (lhs.num > 0) - (lhs.num < 0);
    int sr = sign_of(numerator(rhs));
    if (sl != sr) return sl < sr ? -1 : 1;
    if (sl == 0) return 0;
    // lhs.num / sqrt(p) vs a/b  <=>  (lhs.num * b)^2 vs a^2 * p  (same sign)
    BigInt lb = BigInt(lhs.num) * denominator(rhs);
    BigInt left = lb * lb;
    BigInt right = numerator(rhs) * numerator(rhs) * lhs.radicand;
    int mag = left < right ? -1 : (left == right ? 0 : 1);
    return sl > 0 ? mag : -mag;
}

double to_double(const BigRat& q) { return q.convert_to<double>(); }

std::string to_string(const BigRat& q) {
    return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace specbounds
