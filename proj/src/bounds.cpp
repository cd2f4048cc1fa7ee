#include "bsat/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace bsat {

namespace {

void check_st(int s, int t) {
    if (s < 1 || t < s) throw std::invalid_argument("bounds require 1 <= s <= t");
}

}  // namespace

long long ehm_value(int s, int n) {
    check_st(s, s);
    long long nn = n, k = n - s + 1;
    return nn * nn - k * k;
}

long long ordered_value(int s, int t, int n) {
    check_st(s, t);
    long long nn = n;
    return nn * nn - (nn - s + 1) * (nn - t + 1);
}

long long conjecture_value(int s, int t, int n) {
    check_st(s, t);
    long long k = s + t - 2;
    return k * n - (k * k) / 4;  // floor((k/2)^2) = floor(k^2/4) for integer k
}

long long theorem_lower(int s, int t, int n) {
    check_st(s, t);
    long long k = s + t - 2;
    return k * n - k * k;
}

long long prop1_bound(int s, int t, int n) {
    check_st(s, t);
    return static_cast<long long>(n) * (s + t - 2) -
           static_cast<long long>(t - 1) * (t - 2);
}

long long lemma1_bound(int s, int t, int n, int x0, int x0p, long long e, int x, int xp) {
    check_st(s, t);
    long long sm1 = s - 1;
    return static_cast<long long>(n) * (s + t - 2) -
           static_cast<long long>(x0 + x0p) * (t - 1) - (sm1 * sm1) / 4 + e +
           std::min(static_cast<long long>(t - s) * x, static_cast<long long>(t - s) * xp);
}

long long claim1_bound(int s, int t, int n, int x0, int x0p, long long e, int x) {
    check_st(s, t);
    long long sm1 = s - 1;
    return static_cast<long long>(n) * (s + t - 2) -
           static_cast<long long>(x0 + x0p) * (t - 1) - (sm1 * sm1) / 4 + e +
           static_cast<long long>(t - s) * x;
}

long long wsat_envelope(int s, int n) {
    if (s < 1) throw std::invalid_argument("wsat_envelope requires s >= 1");
    return static_cast<long long>(2 * s - 2) * n;
}

std::vector<BoundReport> bound_reports(int s, int t, int n) {
    check_st(s, t);
    std::vector<BoundReport> out;
    if (s == t)
        out.push_back({"ehm_value", ehm_value(s, n), s, t, n, s <= n, ""});
    out.push_back({"ordered_value", ordered_value(s, t, n), s, t, n, t <= n, ""});
    // the conjectured value is a proven saturation number for s = t and
    // s = 1 (any n >= t) and for (2,3) once n >= 4; open elsewhere
    const bool conjecture_proven =
        (s == t && n >= t) || (s == 1 && n >= t) || (s == 2 && t == 3 && n >= 4);
    out.push_back({"conjecture_value", conjecture_value(s, t, n), s, t, n, conjecture_proven,
                   conjecture_proven ? "" : "conjectured only; n0 unspecified"});
    out.push_back({"theorem_lower", theorem_lower(s, t, n), s, t, n, t <= n, ""});
    out.push_back({"prop1_bound", prop1_bound(s, t, n), s, t, n, t <= n,
                   "valid when min degree < t-1"});
    out.push_back({"wsat_envelope", wsat_envelope(s, n), s, t, n, false,
                   "asymptotic envelope, not an exact bound at finite n"});
    return out;
}

}  // namespace bsat
