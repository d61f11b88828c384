#pragma once

#include <functional>
#include <memory>

#include "catcenter/twocat.hpp"

namespace catcenter {

/// 2-dimensional functor between strict 2-categories. Lax structure cells
/// run F(g)F(f) => F(gf) and id => F(id); colax cells run the other way.
/// Checkable functors need an enumerable domain; codomains are arbitrary.
class Functor2 {
public:
    const TwoCat* src = nullptr;
    const TwoCat* dst = nullptr;
    bool lax = false, colax = false, pseudo = false;

    virtual ~Functor2() = default;
    virtual int obj(int a) const = 0;
    virtual One one(const One& f) const = 0;
    virtual Two two(const Two& al) const = 0;
    virtual Two lax2(const One& g, const One& f) const;
    virtual Two lax0(int a) const;
    virtual Two colax2(const One& g, const One& f) const;
    virtual Two colax0(int a) const;
};

/// Dense tables over an enumerable domain.
class TableFunctor2 : public Functor2 {
public:
    std::vector<int> obj_map;
    std::vector<std::vector<std::vector<One>>> one_map;  // [a][b][f]
    std::vector<std::vector<std::vector<Two>>> two_map;  // [a][b][m]
    // [a][b][c][g][f], g in hom(b,c), f in hom(a,b)
    std::vector<std::vector<std::vector<std::vector<std::vector<Two>>>>> lax2_map, colax2_map;
    std::vector<Two> lax0_map, colax0_map;

    int obj(int a) const override { return obj_map[a]; }
    One one(const One& f) const override { return one_map[f.src][f.dst][f.v]; }
    Two two(const Two& al) const override { return two_map[al.from.src][al.from.dst][al.v]; }
    Two lax2(const One& g, const One& f) const override;
    Two lax0(int a) const override;
    Two colax2(const One& g, const One& f) const override;
    Two colax0(int a) const override;
};

/// Lambda-backed functor; used for constant functors into non-enumerable
/// codomains and for lazy composites.
class FnFunctor2 : public Functor2 {
public:
    std::function<int(int)> obj_fn;
    std::function<One(const One&)> one_fn;
    std::function<Two(const Two&)> two_fn;
    std::function<Two(const One&, const One&)> lax2_fn, colax2_fn;
    std::function<Two(int)> lax0_fn, colax0_fn;

    int obj(int a) const override { return obj_fn(a); }
    One one(const One& f) const override { return one_fn(f); }
    Two two(const Two& al) const override { return two_fn(al); }
    Two lax2(const One& g, const One& f) const override { return lax2_fn(g, f); }
    Two lax0(int a) const override { return lax0_fn(a); }
    Two colax2(const One& g, const One& f) const override { return colax2_fn(g, f); }
    Two colax0(int a) const override { return colax0_fn(a); }
};

/// Materialize a functor given by rules into dense tables (domain must be
/// enumerable).
TableFunctor2 materialize_functor2(
    const TwoCat& src, const TwoCat& dst, bool lax, bool colax, bool pseudo,
    const std::function<int(int)>& obj, const std::function<One(const One&)>& one,
    const std::function<Two(const Two&)>& two,
    const std::function<Two(const One&, const One&)>& lax2, const std::function<Two(int)>& lax0,
    const std::function<Two(const One&, const One&)>& colax2,
    const std::function<Two(int)>& colax0);

TableFunctor2 identity_functor2(const TwoCat& k);

/// Delooping of a lax monoidal functor: a 2-functor between (deloopings of)
/// its source and a 2-category whose hom(dst_cell, dst_cell) is the target
/// substrate.
TableFunctor2 deloop_monfunctor(const LaxMonFunctor& f, const TableTwoCat& src_deloop,
                                const TableTwoCat& dst_twocat, int dst_cell);

FnFunctor2 compose_functor2(const Functor2& g, const Functor2& f);

bool functor2_equal_on_domain(const Functor2& a, const Functor2& b);

Report check_functor2(const Functor2& f);

/// Lax or colax natural transformation between parallel 2-functors. The laws
/// checked depend on which structures the functors carry: a colax
/// transformation is checked against lax functor structure (colax
/// multiplicativity/unitality) whenever present and against colax structure
/// (the distributive-law form) whenever present; lax transformations dually.
struct Transformation2 {
    enum Kind { Lax, Colax };
    Kind kind = Colax;
    const Functor2* F = nullptr;
    const Functor2* G = nullptr;
    std::vector<One> one;                            // per domain 0-cell
    std::vector<std::vector<std::vector<Two>>> two;  // [a][b][f]
    std::vector<std::vector<std::vector<Two>>> two_inv;  // pseudonatural witnesses
    bool has_inv = false;
    // Which functor structure the coherence laws refer to. Pseudofunctors
    // satisfy both sets at once; for genuinely bilax functors they differ
    // (the components of a bilax transformation are each coherent with one
    // side only), so constructions narrow these flags.
    bool wrt_lax = true, wrt_colax = true;

    const Two& at(const One& f) const { return two[f.src][f.dst][f.v]; }
    Two& at(const One& f) { return two[f.src][f.dst][f.v]; }
    const Two& inv_at(const One& f) const { return two_inv[f.src][f.dst][f.v]; }
};

Transformation2 identity_transformation2(const Functor2& f, Transformation2::Kind kind);

Report check_transformation2(const Transformation2& t);

Transformation2 vcompose_transformations(const Transformation2& t2, const Transformation2& t1);

/// Horizontal composition; both functor pairs must be pseudo (the pasting
/// consumes the lax structure and its inverse).
Transformation2 hcompose_transformations(const Transformation2& t2, const Transformation2& t1);

std::vector<Transformation2> enumerate_transformations(const Functor2& f, const Functor2& g,
                                                       Transformation2::Kind kind);

struct Modification2 {
    const Transformation2* src = nullptr;
    const Transformation2* dst = nullptr;
    std::vector<Two> comp;  // per domain 0-cell
};

Report check_modification2(const Modification2& m);

std::vector<Modification2> enumerate_modifications2(const Transformation2& s,
                                                    const Transformation2& t);

/// Builds the finite category of transformations F => G of the given kind
/// (objects) and their modifications (morphisms).
FinCategory transformation_category(const Functor2& f, const Functor2& g,
                                    Transformation2::Kind kind,
                                    std::vector<Transformation2>* objects_out = nullptr);

}  // namespace catcenter
