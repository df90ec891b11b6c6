#pragma once

#include <string>
#include <vector>

#include "hypcheck/affine.hpp"
#include "hypcheck/catalog.hpp"
#include "hypcheck/named.hpp"

namespace hypcheck {

// A finite group of affine parameter maps with its composition table.
// table[i][j] is the index of compose(elements[i], elements[j]), i.e. the
// row element applied after the column element.
struct GroupTable {
    std::vector<AffineMap> elements;
    std::vector<std::vector<int>> table;
    std::vector<int> orders;

    int order() const { return static_cast<int>(elements.size()); }
    bool is_abelian() const;
};

// Closure of the generators under composition (which, for invertible
// elements of a finite closure, already contains inverses). The identity is
// always included. Throws ClosureCapError past the element cap.
GroupTable generate_group(const std::vector<AffineMap>& generators, int cap = 64);

// Rebuilds the composition table and orders for a given element ordering.
GroupTable group_with_elements(std::vector<AffineMap> elements);

std::vector<int> element_orders(const GroupTable& g);

enum class GroupLabel { trivial, S2, S3 };
GroupLabel classify_group(const GroupTable& g);  // UnsupportedOrderError outside {1,2,6}
std::string group_label_str(GroupLabel label);

enum class Family { T, Ttilde, R, Rtilde, Q, M };

// One invariance family: the base named function, its relation maps in
// numbered order (index 0 is the identity relation), and which of them
// generate the group.
struct FamilyData {
    Family family;
    std::string name;
    NamedId fn;
    std::vector<std::string> param_names;
    std::vector<std::string> relation_ids;
    std::vector<AffineMap> relations;
    std::vector<int> generator_indices;
};

const std::vector<FamilyData>& families();
const FamilyData& family_data(Family f);
const FamilyData* find_family(std::string_view name);

// Generates the family's group from its generators and arranges the
// elements in the numbered relation order; throws if the generated set
// differs from the family's relation list.
GroupTable family_group(Family f);

// One symmetric reparameterization: sym(params) = base(rho(params)), with
// the permutations of sym's parameters listed against the base family's
// relations in corresponding order.
struct SymFamilyData {
    NamedId sym;
    Family base;
    AffineMap rho;
    std::string id_prefix;                // catalog id stem, e.g. "U-sym"
    std::string eq_prefix;                // equation label stem, e.g. "UI"
    std::vector<std::string> perm_names;  // e.g. "xzy"
    std::vector<AffineMap> perms;
};

const std::vector<SymFamilyData>& sym_families();
const SymFamilyData& sym_family(NamedId sym);

// Certifies that conjugating the k-th permutation through the
// reparameterization gives exactly the k-th base relation: as affine maps,
// rho . sigma_k = phi_k . rho (with n formal). The verdict carries no
// values; holds means symbolic equality.
Verdict verify_reparameterization(NamedId sym, int relation_index);

// Text certificate: element list, composition table, orders, classification.
std::string print_group(Family f);

} // namespace hypcheck
