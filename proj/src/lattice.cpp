#include "dimerlab/lattice.hpp"

#include <algorithm>

namespace dimerlab {

LatticePoint LatticePoint::from_triangle(int p, int q, int r, int wp, int wq, int wr) {
    LatticePoint pt;
    for (auto [v, w] : {std::pair{p, wp}, std::pair{q, wq}, std::pair{r, wr}})
        if (w > 0) pt.weights.emplace_back(v, w);
    std::sort(pt.weights.begin(), pt.weights.end());
    return pt;
}

int LatticePoint::weight_of(int vertex) const {
    for (auto [v, w] : weights)
        if (v == vertex) return w;
    return 0;
}

bool LatticePoint::supported_on(const std::vector<int>& vertices) const {
    return std::all_of(weights.begin(), weights.end(), [&](const auto& vw) {
        return std::find(vertices.begin(), vertices.end(), vw.first) != vertices.end();
    });
}

std::string to_string(const LatticePoint& p) {
    std::string s = "[";
    for (std::size_t i = 0; i < p.weights.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(p.weights[i].first) + ":" + std::to_string(p.weights[i].second);
    }
    return s + "]";
}

} // namespace dimerlab
