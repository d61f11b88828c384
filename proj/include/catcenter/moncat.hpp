#pragma once

#include <optional>
#include <vector>

#include "catcenter/fincat.hpp"
#include "catcenter/fpmat.hpp"

namespace catcenter {

/// Strict monoidal structure on a table-backed category. Tensor tables are
/// total; strictness is required and validated, never repaired.
struct MonCat {
    FinCategory base;
    int unit = 0;
    std::vector<std::vector<int>> tob;   // tensor on objects
    std::vector<std::vector<int>> tmor;  // tensor on morphisms
    // Records the Remark-3.2 orientation for monoidal categories extracted
    // from 2-category endo-homs (tensor given by horizontal composition).
    bool reversed = false;

    int tensor_obj(int a, int b) const { return tob[a][b]; }
    int tensor_mor(int f, int g) const { return tmor[f][g]; }
    int id_mor(int obj) const { return base.identity(obj); }
};

/// Discrete monoidal category of a monoid: objects are the elements, tensor
/// is the multiplication. Rejects non-associative or non-unital tables.
MonCat group_moncat(const std::vector<std::string>& elements,
                    const std::vector<std::vector<int>>& mult);

/// Thin two-object chain 0 -> 1 with tensor max and unit 0.
MonCat poset_max_moncat();

Report validate_moncat(const MonCat& m);

/// Lax monoidal functor; strong variants carry witnessed inverses of the
/// structure cells rather than recomputing them.
struct LaxMonFunctor {
    const MonCat* src = nullptr;
    const MonCat* dst = nullptr;
    std::vector<int> obj;
    std::vector<int> mor;
    std::vector<std::vector<int>> lax2;  // F2[a][b]: F(a) (x) F(b) -> F(a (x) b)
    int lax0 = -1;                       // I' -> F(I)
    std::vector<std::vector<int>> colax2;  // inverses, present when strong
    int colax0 = -1;
    bool strong = false;

    static LaxMonFunctor identity(const MonCat& c);
    CatFunctor underlying() const { return CatFunctor{&src->base, &dst->base, obj, mor}; }
};

Report check_lax_monoidal(const LaxMonFunctor& f);
LaxMonFunctor compose_lax_monoidal(const LaxMonFunctor& g, const LaxMonFunctor& f);
bool same_lax_monoidal(const LaxMonFunctor& a, const LaxMonFunctor& b);

/// Strong monoidal functor on a discrete group category induced by a group
/// endomorphism (object map), structure cells all identities.
LaxMonFunctor group_endomorphism_functor(const MonCat& c, const std::vector<int>& obj_map);

/// Yang-Baxter data at the 1-category level: components c[a][b]: a(x)b -> b(x)a.
struct Ybo1 {
    const MonCat* carrier = nullptr;
    std::vector<std::vector<int>> comp;
};

/// Identity-component YBO; valid exactly on commutative tensor tables.
Ybo1 identity_ybo1(const MonCat& c);

Report check_ybo1(const Ybo1& y);

/// Exact matrices over F_p under Kronecker tensor. Hom-sets are never
/// enumerated; validation spot-checks a caller-supplied pool.
struct MatBackend {
    int p = 2;
    explicit MatBackend(int prime, bool allow_large = false);
};

Report validate_matbackend(const MatBackend& m, const std::vector<FpMat>& pool);

}  // namespace catcenter
