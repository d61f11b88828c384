#pragma once

#include <functional>
#include <initializer_list>
#include <memory>
#include <string>
#include <vector>

#include "catcenter/bimodule.hpp"
#include "catcenter/fpmat.hpp"
#include "catcenter/moncat.hpp"

namespace catcenter {

/// 1-cell value. For table 2-categories v is the object index inside the
/// hom-category; for the matrix backend v is the dimension.
struct One {
    int src = 0, dst = 0;
    long long v = 0;
    bool operator==(const One&) const = default;
};

/// 2-cell value between parallel 1-cells `from` and `to`. Table backends use
/// the morphism index v of the hom-category, the matrix backend uses m.
struct Two {
    One from, to;
    long long v = 0;
    FpMat m;
    bool operator==(const Two&) const = default;
};

/// Strict 2-category interface. Horizontal composition is written in
/// diagram order: hcomp1(l, r) = l after r, and under delooping translates
/// verbatim, hcomp1(y, x) = tensor(Y, X). String diagram rows therefore
/// transcribe left-to-right and top-to-bottom with hrow/vseq.
class TwoCat {
public:
    virtual ~TwoCat() = default;

    virtual int zero_cells() const = 0;
    virtual One unit_one(int a) const = 0;
    virtual One hcomp1(const One& l, const One& r) const = 0;
    virtual Two id2(const One& f) const = 0;
    virtual Two vcomp(const Two& later, const Two& first) const = 0;
    virtual Two hcomp2(const Two& l, const Two& r) const = 0;

    virtual bool enumerable() const = 0;
    virtual std::vector<One> one_cells(int a, int b) const;
    virtual std::vector<Two> two_cells(const One& f, const One& g) const;

    virtual std::string one_name(const One& f) const;
    virtual std::string two_name(const Two& a) const;
};

Two vseq(const TwoCat& k, std::initializer_list<Two> top_to_bottom);
Two hrow(const TwoCat& k, std::initializer_list<Two> left_to_right);
One hpath(const TwoCat& k, std::initializer_list<One> left_to_right);

/// All 1-endocells of an enumerable 2-category, grouped by 0-cell.
std::vector<One> endo_one_cells(const TwoCat& k, int a);

/// Table-backed strict 2-category: hom-categories plus total horizontal
/// composition tables.
class TableTwoCat : public TwoCat {
public:
    int n0 = 0;
    std::vector<std::vector<FinCategory>> homs;  // [a][b]
    // hobj[a][b][c][g][f]: composite of g in hom(b,c) after f in hom(a,b)
    std::vector<std::vector<std::vector<std::vector<std::vector<int>>>>> hobj;
    std::vector<std::vector<std::vector<std::vector<std::vector<int>>>>> hmor;
    std::vector<int> unit1;  // object index in hom(a,a)

    void allocate(int zero_cell_count);
    const FinCategory& hom(int a, int b) const { return homs[a][b]; }

    int zero_cells() const override { return n0; }
    One unit_one(int a) const override { return One{a, a, unit1[a]}; }
    One hcomp1(const One& l, const One& r) const override;
    Two id2(const One& f) const override;
    Two vcomp(const Two& later, const Two& first) const override;
    Two hcomp2(const Two& l, const Two& r) const override;
    bool enumerable() const override { return true; }
    std::vector<One> one_cells(int a, int b) const override;
    std::vector<Two> two_cells(const One& f, const One& g) const override;
    std::string one_name(const One& f) const override;
    std::string two_name(const Two& a) const override;

    Two make2(int a, int b, int mor_index) const;
};

Report validate_twocat(const TableTwoCat& k);

/// Delooping of a strict monoidal category: one 0-cell, hom = the underlying
/// category, horizontal composition the tensor read verbatim.
TableTwoCat deloop_moncat(const MonCat& c);

/// Extract the endo-hom monoidal category at 0-cell a (tensor = hcomp).
MonCat endocat(const TableTwoCat& k, int a);

/// Two-object delooping of a bimodule category. hom(1,0) is the trivial
/// category for regular bimodules (where composition through its 1-cell has
/// a consistent meaning) and empty otherwise.
TableTwoCat deloop_bimodule(const BimoduleCat& b);

/// The 2-category 1: one 0-cell, one 1-cell, one 2-cell.
TableTwoCat trivial_twocat();

/// Delooping of the exact matrix backend: one 0-cell, 1-cells are
/// dimensions, 2-cells are matrices, hcomp2 = Kronecker product.
class MatTwoCat : public TwoCat {
public:
    explicit MatTwoCat(int prime) : p(prime) {}
    int p;

    int zero_cells() const override { return 1; }
    One unit_one(int) const override { return One{0, 0, 1}; }
    One hcomp1(const One& l, const One& r) const override { return One{0, 0, l.v * r.v}; }
    Two id2(const One& f) const override;
    Two vcomp(const Two& later, const Two& first) const override;
    Two hcomp2(const Two& l, const Two& r) const override;
    bool enumerable() const override { return false; }
    std::string one_name(const One& f) const override;
    std::string two_name(const Two& a) const override;

    One dim(long long d) const { return One{0, 0, d}; }
    Two make2(const FpMat& m) const;
};

/// Yang-Baxter operator of a 2-category: c_{g,f}: g.f => f.g on 1-endocells.
struct TwoYbo {
    const TwoCat* k = nullptr;
    std::string name;
    std::function<Two(const One&, const One&)> at;
};

TwoYbo identity_two_ybo(const TwoCat& k);
TwoYbo swap_two_ybo(const MatTwoCat& k);
TwoYbo ybo1_on_deloop(const TableTwoCat& deloop, const Ybo1& y);

/// Yang-Baxter laws of a 2-category YBO over the given probe cells
/// (for enumerable k pass endo_one_cells; the matrix backend needs an
/// explicit finite probe).
Report check_two_ybo(const TwoYbo& c, const std::vector<One>& probe);

bool ybo_equal_on(const TwoYbo& a, const TwoYbo& b, const std::vector<One>& probe);

}  // namespace catcenter
