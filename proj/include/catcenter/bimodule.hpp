#pragma once

#include "catcenter/moncat.hpp"

namespace catcenter {

/// Strict (C,D)-bimodule category: left action of C, right action of D on the
/// carrier M, all given by total tables.
struct BimoduleCat {
    const MonCat* left = nullptr;   // C, acts on the left
    const MonCat* right = nullptr;  // D, acts on the right
    FinCategory carrier;            // M

    std::vector<std::vector<int>> lact_obj;  // [c][m] -> m'
    std::vector<std::vector<int>> lact_mor;  // [f in C][u in M] -> morphism of M
    std::vector<std::vector<int>> ract_obj;  // [m][d] -> m'
    std::vector<std::vector<int>> ract_mor;  // [u in M][f in D]

    int lact(int c, int m) const { return lact_obj[c][m]; }
    int ract(int m, int d) const { return ract_obj[m][d]; }
    bool regular() const;  // C == D == M with actions given by the tensor
};

/// C acting on itself on both sides by the tensor product.
BimoduleCat regular_bimodule(const MonCat& c);

Report validate_bimodule(const BimoduleCat& b);

}  // namespace catcenter
