#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypcheck/recipe.hpp"

namespace hypcheck {

enum class NamedId { T, U, Ttilde, Utilde, Q, W, R, V, Rtilde, Vtilde, M, L };

// A normalized series function: either one of the six base functions
// (prefactor times series over its own parameters) or a reparameterization
// of a base function through an affine map.
struct NamedFunction {
    NamedId id;
    std::string name;
    std::vector<std::string> param_names;
    Side side;  // recipe over this function's own parameters

    // Set for reparameterized functions: own params feed through reparam
    // into the base function's params.
    std::optional<NamedId> base;
    std::optional<AffineMap> reparam;

    int arity() const { return static_cast<int>(param_names.size()); }
};

const std::vector<NamedFunction>& named_functions();
const NamedFunction& named(NamedId id);
const NamedFunction* find_named(std::string_view name);

template <ScalarField S>
S eval_named(NamedId id, long n, const std::vector<S>& params) {
    return eval_side<S>(named(id).side, params, n);
}

} // namespace hypcheck
