#pragma once

#include <string>
#include <vector>

#include "catcenter/report.hpp"

namespace catcenter {

/// Objects and morphisms are identified by their declaration index; morphism
/// equality is index equality. Every enumeration follows declaration order so
/// all downstream output is deterministic.
class FinCategory {
public:
    struct Mor {
        std::string name;
        int src = -1;
        int dst = -1;
    };

    FinCategory() = default;

    int add_object(const std::string& name);
    int add_morphism(const std::string& name, int src, int dst);
    void set_identity(int obj, int mor);
    void set_compose(int g, int f, int gf);  // g after f

    /// Build hom-set caches. Call once after all tables are filled.
    void finalize();

    int num_objects() const { return static_cast<int>(objects_.size()); }
    int num_morphisms() const { return static_cast<int>(mors_.size()); }
    const std::string& object_name(int o) const { return objects_[o]; }
    const Mor& mor(int m) const { return mors_[m]; }
    int identity(int obj) const { return identity_[obj]; }
    // -1 when undefined; tolerates -1 inputs so speculative composites of
    // ill-typed cells stay -1 instead of indexing out of bounds
    int compose(int g, int f) const { return g < 0 || f < 0 ? -1 : compose_[g][f]; }
    bool composable(int g, int f) const { return mors_[g].src == mors_[f].dst; }
    const std::vector<int>& hom(int src, int dst) const;

    int object_index(const std::string& name) const;    // -1 when absent
    int morphism_index(const std::string& name) const;  // -1 when absent

private:
    std::vector<std::string> objects_;
    std::vector<Mor> mors_;
    std::vector<int> identity_;
    std::vector<std::vector<int>> compose_;
    std::vector<std::vector<std::vector<int>>> hom_;  // [src][dst] -> mor ids
    friend Report validate_category(const FinCategory&);
};

/// One-object-per-element category with only identities.
FinCategory discrete_category(const std::vector<std::string>& elements);

/// Structural soundness first (dangling identifiers, endpoint mismatches,
/// totality), then the category laws. Malformed-table findings come out as
/// their own law families, distinct from associativity/unit violations.
Report validate_category(const FinCategory& c);

struct CatFunctor {
    const FinCategory* src = nullptr;
    const FinCategory* dst = nullptr;
    std::vector<int> obj;  // object map
    std::vector<int> mor;  // morphism map

    static CatFunctor identity(const FinCategory& c);
};

Report check_functor(const CatFunctor& f);
CatFunctor compose_functors(const CatFunctor& g, const CatFunctor& f);

struct NatTransf {
    const CatFunctor* src = nullptr;  // parallel functors
    const CatFunctor* dst = nullptr;
    std::vector<int> comp;  // per object of source category, morphism of target
};

Report check_nat(const NatTransf& a);
NatTransf vcompose_nat(const NatTransf& b, const NatTransf& a);

}  // namespace catcenter
