#pragma once

#include <stdexcept>
#include <string>

namespace ostat {

struct PeakIndex {
    int n = 0;
    int t = 0;
    int m = 0;
};

/// (n-t)/2 when n-t is even, (n-t+1)/2 when odd.  Defined for 1 <= t <= n-1.
inline int parity_peak(int n, int t) {
    if (t < 1 || t > n - 1)
        throw std::out_of_range("need 1 <= t <= n-1; got n=" + std::to_string(n) +
                                ", t=" + std::to_string(t));
    int gap = n - t;
    return gap % 2 == 0 ? gap / 2 : (gap + 1) / 2;
}

/// Peak of the exponential h(k) over k, for the unimodal regime 1 <= t <= n-3.
inline PeakIndex peak_index(int n, int t) {
    if (t < 1 || t > n - 3)
        throw std::out_of_range("peak index needs 1 <= t <= n-3; got n=" + std::to_string(n) +
                                ", t=" + std::to_string(t));
    return {n, t, parity_peak(n, t)};
}

}  // namespace ostat
