#include "hypcheck/named.hpp"

namespace hypcheck {

namespace {

const Rational kOne(1);
const Rational kHalf(1, 2);
const Rational kThird(1, 3);

// T_n(a,b,c) = (1+a-c)_n (c)_n 4F3(-n, a/2, (a+1)/2, b; a, 1+a-c, c; 4)
NamedFunction make_T() {
    const int k = 3;
    auto a = AffineExpr::param(k, 0);
    auto b = AffineExpr::param(k, 1);
    auto c = AffineExpr::param(k, 2);
    auto n1 = AffineExpr::n_term(k);

    NamedFunction f;
    f.id = NamedId::T;
    f.name = "T";
    f.param_names = {"a", "b", "c"};
    f.side.pre.num_poch = {{kOne + a - c}, {c}};
    f.side.series.numerators = {-n1, kHalf * a, kHalf * (a + kOne), b};
    f.side.series.denominators = {a, kOne + a - c, c};
    f.side.series.argument = 4;
    return f;
}

// Ttilde_n(a,c) = (1+a-c)_n (c)_n 3F2(-n, a/2, (a+1)/2; 1+a-c, c; 4)
NamedFunction make_Ttilde() {
    const int k = 2;
    auto a = AffineExpr::param(k, 0);
    auto c = AffineExpr::param(k, 1);
    auto n1 = AffineExpr::n_term(k);

    NamedFunction f;
    f.id = NamedId::Ttilde;
    f.name = "Ttilde";
    f.param_names = {"a", "c"};
    f.side.pre.num_poch = {{kOne + a - c}, {c}};
    f.side.series.numerators = {-n1, kHalf * a, kHalf * (a + kOne)};
    f.side.series.denominators = {kOne + a - c, c};
    f.side.series.argument = 4;
    return f;
}

// Q_n(a,c) = (1+a-c)_n (c)_n 3F2(-n, a/2, (a+1)/2; a, c; 4)
NamedFunction make_Q() {
    const int k = 2;
    auto a = AffineExpr::param(k, 0);
    auto c = AffineExpr::param(k, 1);
    auto n1 = AffineExpr::n_term(k);

    NamedFunction f;
    f.id = NamedId::Q;
    f.name = "Q";
    f.param_names = {"a", "c"};
    f.side.pre.num_poch = {{kOne + a - c}, {c}};
    f.side.series.numerators = {-n1, kHalf * a, kHalf * (a + kOne)};
    f.side.series.denominators = {a, c};
    f.side.series.argument = 4;
    return f;
}

// R_n(a,b,c) = (1-a)_n (b)_n 4F3(-n, a, a-c-n, c; (a-n)/2, (1+a-n)/2, b; 1/4)
NamedFunction make_R() {
    const int k = 3;
    auto a = AffineExpr::param(k, 0);
    auto b = AffineExpr::param(k, 1);
    auto c = AffineExpr::param(k, 2);
    auto n1 = AffineExpr::n_term(k);

    NamedFunction f;
    f.id = NamedId::R;
    f.name = "R";
    f.param_names = {"a", "b", "c"};
    f.side.pre.num_poch = {{kOne - a}, {b}};
    f.side.series.numerators = {-n1, a, a - c - n1, c};
    f.side.series.denominators = {kHalf * (a - n1), kHalf * (kOne + a - n1), b};
    f.side.series.argument = Rational(1, 4);
    return f;
}

// Rtilde_n(a,c) = (1-a)_n (a)_n 3F2(-n, a-c-n, c; (a-n)/2, (1+a-n)/2; 1/4)
NamedFunction make_Rtilde() {
    const int k = 2;
    auto a = AffineExpr::param(k, 0);
    auto c = AffineExpr::param(k, 1);
    auto n1 = AffineExpr::n_term(k);

    NamedFunction f;
    f.id = NamedId::Rtilde;
    f.name = "Rtilde";
    f.param_names = {"a", "c"};
    f.side.pre.num_poch = {{kOne - a}, {a}};
    f.side.series.numerators = {-n1, a - c - n1, c};
    f.side.series.denominators = {kHalf * (a - n1), kHalf * (kOne + a - n1)};
    f.side.series.argument = Rational(1, 4);
    return f;
}

// M_n(a,c) = (1-a)_n (1+c-a)_n 3F2(-n, a, c; (a-n)/2, (1+a-n)/2; 1/4)
NamedFunction make_M() {
    const int k = 2;
    auto a = AffineExpr::param(k, 0);
    auto c = AffineExpr::param(k, 1);
    auto n1 = AffineExpr::n_term(k);

    NamedFunction f;
    f.id = NamedId::M;
    f.name = "M";
    f.param_names = {"a", "c"};
    f.side.pre.num_poch = {{kOne - a}, {kOne + c - a}};
    f.side.series.numerators = {-n1, a, c};
    f.side.series.denominators = {kHalf * (a - n1), kHalf * (kOne + a - n1)};
    f.side.series.argument = Rational(1, 4);
    return f;
}

NamedFunction reparameterized(NamedId id, std::string name, std::vector<std::string> param_names,
                              const NamedFunction& base, AffineMap rho) {
    NamedFunction f;
    f.id = id;
    f.name = std::move(name);
    f.param_names = std::move(param_names);
    f.side = base.side.substituted(rho);
    f.base = base.id;
    f.reparam = std::move(rho);
    return f;
}

std::vector<NamedFunction> build() {
    NamedFunction T = make_T();
    NamedFunction Tt = make_Ttilde();
    NamedFunction Q = make_Q();
    NamedFunction R = make_R();
    NamedFunction Rt = make_Rtilde();
    NamedFunction M = make_M();

    const int k3 = 3;
    auto x = AffineExpr::param(k3, 0);
    auto y = AffineExpr::param(k3, 1);
    auto z = AffineExpr::param(k3, 2);
    auto n3 = AffineExpr::n_term(k3);

    // U_n(x,y,z) = T_n(x-y-z, (1+3x-y-z-2n)/2, (1+x+y-3z)/2)
    AffineMap rho_U({x - y - z,
                     kHalf * (kOne + Rational(3) * x - y - z - Rational(2) * n3),
                     kHalf * (kOne + x + y - Rational(3) * z)});
    // Utilde_n(x,y,z) = Ttilde_n((1+2x-y-z-2n)/3, (2+x+y-2z-n)/3)
    AffineMap rho_Ut({kThird * (kOne + Rational(2) * x - y - z - Rational(2) * n3),
                      kThird * (Rational(2) + x + y - Rational(2) * z - n3)});
    // V_n(x,y,z) = R_n(x-y-z, (2+3x-y-z-n)/2, (x+y-3z-n)/2)
    AffineMap rho_V({x - y - z,
                     kHalf * (Rational(2) + Rational(3) * x - y - z - n3),
                     kHalf * (x + y - Rational(3) * z - n3)});
    // Vtilde_n(x,y,z) = Rtilde_n((2+2x-y-z-n)/3, (1+x+y-2z-2n)/3)
    AffineMap rho_Vt({kThird * (Rational(2) + Rational(2) * x - y - z - n3),
                      kThird * (kOne + x + y - Rational(2) * z - Rational(2) * n3)});

    const int k2 = 2;
    auto wx = AffineExpr::param(k2, 0);
    auto wy = AffineExpr::param(k2, 1);
    auto n2 = AffineExpr::n_term(k2);

    // W_n(x,y) = Q_n(x, (1+x+y+n)/2)
    AffineMap rho_W({wx, kHalf * (kOne + wx + wy + n2)});
    // L_n(x,y) = M_n(x, (x+y-n-1)/2)
    AffineMap rho_L({wx, kHalf * (wx + wy - n2 - kOne)});

    std::vector<NamedFunction> fns;
    fns.push_back(T);
    fns.push_back(reparameterized(NamedId::U, "U", {"x", "y", "z"}, T, rho_U));
    fns.push_back(Tt);
    fns.push_back(reparameterized(NamedId::Utilde, "Utilde", {"x", "y", "z"}, Tt, rho_Ut));
    fns.push_back(Q);
    fns.push_back(reparameterized(NamedId::W, "W", {"x", "y"}, Q, rho_W));
    fns.push_back(R);
    fns.push_back(reparameterized(NamedId::V, "V", {"x", "y", "z"}, R, rho_V));
    fns.push_back(Rt);
    fns.push_back(reparameterized(NamedId::Vtilde, "Vtilde", {"x", "y", "z"}, Rt, rho_Vt));
    fns.push_back(M);
    fns.push_back(reparameterized(NamedId::L, "L", {"x", "y"}, M, rho_L));
    return fns;
}

} // namespace

const std::vector<NamedFunction>& named_functions() {
    static const std::vector<NamedFunction> fns = build();
    return fns;
}

const NamedFunction& named(NamedId id) {
    return named_functions().at(static_cast<size_t>(id));
}

const NamedFunction* find_named(std::string_view name) {
    for (const auto& f : named_functions())
        if (f.name == name) return &f;
    return nullptr;
}

} // namespace hypcheck
