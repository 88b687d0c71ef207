#pragma once

namespace regraph {

/// Equal-width partition of [0, chi_max(k)] into bin_count bins. The default
/// bin count is round(2 n chi_max), which makes the width 0.5/n for every k
/// and gives 7n/5 bins for k = 4 (14 at n=10, 21 at n=15, ..., 70 at n=50).
/// chi values are mapped by floor(chi * B / chi_max), with the top edge
/// clamped into the last bin.
struct BinAssigner {
    int n = 0;
    int k = 0;
    int bin_count = 0;
    double chi_max = 0.0;

    static BinAssigner make(int n, int k);
    static BinAssigner make(int n, int k, int bin_count);

    /// Throws std::out_of_range for chi outside [-1e-12, chi_max + 1e-12].
    int assign(double chi) const;

    double low(int bin) const;
    double high(int bin) const;

    bool operator==(const BinAssigner& o) const {
        return n == o.n && k == o.k && bin_count == o.bin_count;
    }
    bool operator!=(const BinAssigner& o) const { return !(*this == o); }
};

}  // namespace regraph
