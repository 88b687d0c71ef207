#include "regraph/binning.hpp"

#include <cmath>
#include <stdexcept>

#include "regraph/metrics.hpp"

namespace regraph {

BinAssigner BinAssigner::make(int n, int k) {
    const double cm = max_clustering(k);
    const int bins = std::max(1, static_cast<int>(std::llround(2.0 * n * cm)));
    return make(n, k, bins);
}

BinAssigner BinAssigner::make(int n, int k, int bin_count) {
    if (n <= 0 || bin_count <= 0) throw std::invalid_argument("BinAssigner: bad parameters");
    return BinAssigner{n, k, bin_count, max_clustering(k)};
}

int BinAssigner::assign(double chi) const {
    if (chi < -1e-12 || chi > chi_max + 1e-12)
        throw std::out_of_range("BinAssigner: chi outside feasible range");
    int b = static_cast<int>(std::floor(chi * bin_count / chi_max));
    if (b < 0) b = 0;
    if (b >= bin_count) b = bin_count - 1;
    return b;
}

double BinAssigner::low(int bin) const { return chi_max * bin / bin_count; }

double BinAssigner::high(int bin) const { return chi_max * (bin + 1) / bin_count; }

}  // namespace regraph
