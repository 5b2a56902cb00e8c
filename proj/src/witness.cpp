#include "sge/witness.hpp"

#include <algorithm>
#include <tuple>

namespace sge {

void canonicalize(Witness& w) {
    std::sort(w.set.begin(), w.set.end());
    w.set.erase(std::unique(w.set.begin(), w.set.end()), w.set.end());
    for (auto& pp : w.paths) {
        if (pp.u > pp.v) std::swap(pp.u, pp.v);
        if (pp.u != pp.v && !pp.path.empty() && pp.path.front() == pp.v &&
            pp.path.back() == pp.u)
            std::reverse(pp.path.begin(), pp.path.end());
    }
    std::sort(w.paths.begin(), w.paths.end(), [](const PairPath& a, const PairPath& b) {
        return std::tie(a.u, a.v) < std::tie(b.u, b.v);
    });
}

}  // namespace sge
