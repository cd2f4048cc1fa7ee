#ifndef BSAT_BOUNDS_HPP
#define BSAT_BOUNDS_HPP

#include <string>
#include <vector>

namespace bsat {

// Closed-form values and lower bounds, exact integer arithmetic throughout.
// All evaluators accept n below the stated validity thresholds (the report
// layer tags those rows instead of erroring).

// n^2 - (n-s+1)^2, the s = t saturation number.
long long ehm_value(int s, int n);

// n^2 - (n-s+1)(n-t+1) = (s+t-2)n - (s-1)(t-1), the ordered saturation number.
long long ordered_value(int s, int t, int n);

// (s+t-2)n - floor((s+t-2)^2 / 4), the conjectured unordered minimum.
long long conjecture_value(int s, int t, int n);

// (s+t-2)n - (s+t-2)^2, the proven unordered lower bound.
long long theorem_lower(int s, int t, int n);

// n(t+s-2) - (t-1)(t-2), valid for saturated graphs of minimum degree < t-1.
long long prop1_bound(int s, int t, int n);

// n(s+t-2) - (x0+x0')(t-1) - floor((s-1)^2/4) + e + min((t-s)x, (t-s)x').
long long lemma1_bound(int s, int t, int n, int x0, int x0p, long long e, int x, int xp);

// As lemma1_bound but with the (t-s)x term only (the |C2| <= |C2'| side).
long long claim1_bound(int s, int t, int n, int x0, int x0p, long long e, int x);

// (2s-2)n, the leading term of the weak saturation number. Asymptotic
// envelope only, not an exact bound at finite n.
long long wsat_envelope(int s, int n);

struct BoundReport {
    std::string name;
    long long value;
    int s, t, n;
    bool in_stated_range;  // false = "outside stated range", reported as-is
    std::string note;
};

// One report per formula applicable to (s,t,n); ehm appears only when s == t.
std::vector<BoundReport> bound_reports(int s, int t, int n);

}  // namespace bsat

#endif
