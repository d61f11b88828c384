#pragma once

#include "catcenter/bilax.hpp"

namespace catcenter {
namespace suite {

/// Multiplication tables of the bundled groups, unit first.
std::vector<std::vector<int>> cyclic_table(int n);
std::vector<std::vector<int>> s3_table();
std::vector<std::vector<int>> d4_table();

std::vector<std::string> cyclic_names(int n);
std::vector<std::string> s3_names();
std::vector<std::string> d4_names();

MonCat z2();
MonCat z4();
MonCat s3();
MonCat d4();

/// Index of the inverse element in a group table.
int group_inverse(const std::vector<std::vector<int>>& table, int g);

/// Brute-force group center: elements commuting with everything.
std::vector<int> group_center(const std::vector<std::vector<int>>& table);

/// Conjugation x -> t x t^{-1} as a strong monoidal endofunctor of a group
/// category.
LaxMonFunctor conjugation_functor(const MonCat& g, const std::vector<std::vector<int>>& table,
                                  int t);

/// Group algebra F_p[G] as a bimonad in the matrix delooping: mu the group
/// multiplication, delta diagonal, eps constant one, ybo the Kronecker swap.
Bimonad group_algebra_bimonad(const MatTwoCat& k, const std::vector<std::vector<int>>& table);

}  // namespace suite
}  // namespace catcenter
