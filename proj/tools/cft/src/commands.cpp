#include "cft_cli/commands.hpp"

#include "cft/arith.hpp"
#include "cft/artin.hpp"
#include "cft/cohomology.hpp"
#include "cft/density.hpp"
#include "cft/error.hpp"
#include "cft/forms.hpp"
#include "cft/hilbert.hpp"
#include "cft/ideals.hpp"
#include "cft/padic.hpp"
#include "cft/parallel.hpp"
#include "cft/quadfield.hpp"
#include "cft/rayclass.hpp"
#include "cft/sieve.hpp"
#include "cft/verify.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <functional>
#include <memory>
#include <ostream>
#include <sstream>

namespace cft::cli {

namespace {

// Sweeps above this bound need --large; kDensityHardCap is never exceeded.
constexpr u64 kDensitySoftCap = 10'000'000;
constexpr u64 kPrimeListCap = 10'000'000;

struct Globals {
    u64 seed = kDefaultSeed;
    std::string format = "json";
    bool timing = false;
    unsigned workers = 1;
};

struct Dispatch {
    std::string command;
    std::function<RunReport()> action;
    std::ostream* err = nullptr;
};

template <class T>
std::shared_ptr<T> slot(T init = T{}) {
    return std::make_shared<T>(std::move(init));
}

Json rational_json(const Rational& q) { return to_string(q); }

Json place_key_json(const HilbertProduct& hp) {
    Json symbols = Json::object();
    for (const auto& [v, s] : hp.symbols) symbols[to_string(v)] = s;
    return symbols;
}

Json shape_json(const AbelianGroupShape& g) {
    Json torsion = Json::array();
    for (const BigInt& d : g.torsion) torsion.push_back(d.get_str());
    auto order = g.order();
    return {{"torsion", torsion},
            {"free_rank", g.free_rank},
            {"order", order ? Json(order->get_str()) : Json(nullptr)},
            {"text", to_string(g)}};
}

Json frequency_json(const FrequencyReport& r) {
    Json classes = Json::array();
    for (const FrequencyClass& c : r.classes) {
        classes.push_back({{"label", c.label},
                           {"count", c.count},
                           {"frequency", c.frequency},
                           {"expected", c.expected ? Json(*c.expected) : Json(nullptr)}});
    }
    return {{"bound", r.bound},
            {"included", r.included},
            {"excluded", r.excluded},
            {"excluded_primes", r.excluded_primes},
            {"max_abs_deviation", r.max_abs_deviation},
            {"classes", classes}};
}

Table frequency_table(const FrequencyReport& r) {
    Table t{{"class", "count", "frequency", "expected"}};
    for (const FrequencyClass& c : r.classes) {
        std::ostringstream f, e;
        f.precision(8);
        e.precision(8);
        f << c.frequency;
        if (c.expected) e << *c.expected;
        t.push_back({c.label, std::to_string(c.count), f.str(), e.str()});
    }
    return t;
}

std::string form_text(const BinaryQuadraticForm& f) { return to_string(f); }

QuadIdeal ideal_from_triple(const QuadOrder& order, const std::vector<i64>& abc) {
    if (abc.size() != 3) throw DomainError("ideal must be given as a,b,c (HNF of a*Z + (b + c*w)*Z)");
    return QuadIdeal(order, abc[0], abc[1], abc[2]);
}

Json ideal_json(const QuadIdeal& I) {
    return {{"hnf", {I.a(), I.b(), I.c()}}, {"text", to_string(I)}, {"norm", I.norm()}};
}

void check_density_bound(u64 X, bool large) {
    if (X < 2) throw DomainError("X must be at least 2");
    if (X > kDensityHardCap) throw LimitError("X = " + std::to_string(X) + " exceeds the hard cap 10^8");
    if (X > kDensitySoftCap && !large) {
        throw LimitError("X = " + std::to_string(X) + " exceeds 10^7; pass --large to allow up to 10^8");
    }
}

// ---------------------------------------------------------------- arith

void add_arith(CLI::App& root, Dispatch& d) {
    auto* arith = root.add_subcommand("arith", "Integer and quadratic-order arithmetic");
    arith->require_subcommand(1);

    {
        auto* sub = arith->add_subcommand("factor", "Factor an integer");
        auto n = slot<i64>();
        sub->add_option("-n", *n, "Nonzero integer")->required();
        sub->callback([&d, n] {
            d.command = "arith factor";
            d.action = [n] {
                FactoredInteger f = factorize(*n);
                Json factors = Json::array();
                for (const PrimePower& pp : f.factors) factors.push_back({{"prime", pp.prime}, {"exponent", pp.exponent}});
                RunReport r;
                r.inputs = {{"n", *n}};
                r.result = {{"sign", f.sign}, {"factors", factors}, {"text", to_string(f)}};
                r.checks.push_back({"product_reconstructs_n", f.value() == *n, to_string(f)});
                return r;
            };
        });
    }
    {
        auto* sub = arith->add_subcommand("crt", "Solve x = r_i (mod m_i) for pairwise coprime moduli");
        auto residues = slot<std::vector<i64>>();
        auto moduli = slot<std::vector<u64>>();
        sub->add_option("-r,--residues", *residues, "Comma-separated residues")->required()->delimiter(',');
        sub->add_option("-m,--moduli", *moduli, "Comma-separated moduli")->required()->delimiter(',');
        sub->callback([&d, residues, moduli] {
            d.command = "arith crt";
            d.action = [residues, moduli] {
                if (residues->size() != moduli->size()) throw DomainError("residues and moduli differ in length");
                std::vector<Congruence> system;
                for (std::size_t i = 0; i < residues->size(); ++i) system.push_back({(*residues)[i], (*moduli)[i]});
                ResidueClass x = crt(system);
                RunReport r;
                r.inputs = {{"residues", *residues}, {"moduli", *moduli}};
                r.result = {{"value", x.value}, {"modulus", x.modulus}};
                bool ok = true;
                for (const Congruence& c : system) ok = ok && x.value % c.modulus == reduce_mod(c.residue, c.modulus);
                r.checks.push_back({"solves_every_congruence", ok, std::to_string(system.size()) + " congruences"});
                return r;
            };
        });
    }
    {
        auto* sub = arith->add_subcommand("kronecker", "Kronecker symbol (a/n)");
        auto a = slot<i64>();
        auto n = slot<i64>();
        sub->add_option("-a", *a, "Integer a")->required();
        sub->add_option("-n", *n, "Nonzero integer n")->required();
        sub->callback([&d, a, n] {
            d.command = "arith kronecker";
            d.action = [a, n] {
                RunReport r;
                r.inputs = {{"a", *a}, {"n", *n}};
                r.result = {{"symbol", kronecker_symbol(*a, *n)}};
                return r;
            };
        });
    }
    {
        auto* sub = arith->add_subcommand("sqrtmod", "Square root modulo a prime");
        auto a = slot<i64>();
        auto p = slot<u64>();
        sub->add_option("-a", *a, "Integer a")->required();
        sub->add_option("-p", *p, "Odd prime")->required();
        sub->callback([&d, a, p] {
            d.command = "arith sqrtmod";
            d.action = [a, p] {
                if (!is_prime(*p)) throw DomainError(std::to_string(*p) + " is not prime");
                auto root = sqrt_mod_p(*a, *p);
                RunReport r;
                r.inputs = {{"a", *a}, {"p", *p}};
                r.result = {{"residue", root.has_value()}, {"root", root ? Json(*root) : Json(nullptr)}};
                if (root) {
                    bool ok = mul_mod(*root, *root, *p) == reduce_mod(*a, *p);
                    r.checks.push_back({"root_squares_to_a", ok, std::to_string(*root) + "^2"});
                }
                return r;
            };
        });
    }
    {
        auto* sub = arith->add_subcommand("order", "Multiplicative order of a modulo n");
        auto a = slot<i64>();
        auto n = slot<u64>();
        sub->add_option("-a", *a, "Integer a")->required();
        sub->add_option("-n", *n, "Modulus n >= 2")->required();
        sub->callback([&d, a, n] {
            d.command = "arith order";
            d.action = [a, n] {
                RunReport r;
                r.inputs = {{"a", *a}, {"n", *n}};
                r.result = {{"order", multiplicative_order(*a, *n)}, {"phi", euler_phi(*n)}};
                return r;
            };
        });
    }
    {
        auto* sub = arith->add_subcommand("primes", "List primes in [lo, hi]");
        auto lo = slot<u64>(2);
        auto hi = slot<u64>();
        sub->add_option("--lo", *lo, "Lower bound (inclusive)");
        sub->add_option("--hi", *hi, "Upper bound (inclusive)")->required();
        sub->callback([&d, lo, hi] {
            d.command = "arith primes";
            d.action = [lo, hi] {
                if (*hi > kPrimeListCap) throw LimitError("prime listing is capped at 10^7");
                std::vector<u64> primes = sieve_primes(*lo, *hi);
                RunReport r;
                r.inputs = {{"lo", *lo}, {"hi", *hi}};
                r.result = {{"count", primes.size()}, {"primes", primes}};
                Table t{{"p"}};
                for (u64 p : primes) t.push_back({std::to_string(p)});
                r.table = std::move(t);
                return r;
            };
        });
    }
    {
        auto* sub = arith->add_subcommand("disc", "Discriminant, conductor and unit group of a quadratic order");
        auto D = slot<i64>();
        sub->add_option("-D", *D, "Discriminant (0 or 1 mod 4, not a square)")->required();
        sub->callback([&d, D] {
            d.command = "arith disc";
            d.action = [D] {
                Discriminant disc = make_discriminant(*D);
                QuadOrder order(disc);
                UnitGroup units = unit_group(*D);
                RunReport r;
                r.inputs = {{"D", *D}};
                r.result = {{"D", disc.D},
                            {"fundamental", disc.fundamental},
                            {"conductor", disc.conductor},
                            {"is_fundamental", is_fundamental_discriminant(*D)},
                            {"squarefree_part", order.squarefree_part()},
                            {"torsion_order", units.torsion_order},
                            {"fundamental_unit",
                             units.fundamental_unit ? Json(to_sqrt_form(*units.fundamental_unit)) : Json(nullptr)}};
                if (*D < 0) {
                    ClassNumberResult classes = class_number_neg(*D);
                    r.result["class_number"] = classes.h;
                    Json forms = Json::array();
                    for (const auto& f : classes.forms) forms.push_back(form_text(f));
                    r.result["reduced_forms"] = forms;
                }
                return r;
            };
        });
    }
    {
        auto* sub = arith->add_subcommand("unit", "Fundamental unit of a real quadratic order");
        auto D = slot<i64>();
        sub->add_option("-D", *D, "Positive discriminant")->required();
        sub->callback([&d, D] {
            d.command = "arith unit";
            d.action = [D] {
                QuadElement eps = fundamental_unit(*D);
                RunReport r;
                r.inputs = {{"D", *D}};
                Rational N = eps.norm();
                r.result = {{"unit", to_sqrt_form(eps)}, {"basis_form", to_basis_form(eps)}, {"norm", rational_json(N)}};
                r.checks.push_back({"norm_is_unit", N == 1 || N == -1, "N(eps) = " + to_string(N)});
                return r;
            };
        });
    }
    {
        auto* sub = arith->add_subcommand("decompose", "Decomposition of a rational prime in a quadratic field");
        auto p = slot<u64>();
        auto D = slot<i64>();
        sub->add_option("-p", *p, "Rational prime")->required();
        sub->add_option("-D", *D, "Fundamental discriminant")->required();
        sub->callback([&d, p, D] {
            d.command = "arith decompose";
            d.action = [p, D] {
                PrimeDecomposition dec = decompose_prime(*p, *D);
                Json primes = Json::array();
                for (const QuadIdeal& P : dec.primes) primes.push_back(ideal_json(P));
                RunReport r;
                r.inputs = {{"p", *p}, {"D", *D}};
                r.result = {{"kind", to_string(dec.type.kind)},
                            {"e", dec.type.e},
                            {"f", dec.type.f},
                            {"r", dec.type.r},
                            {"primes", primes}};
                const auto& t = dec.type;
                r.checks.push_back({"efr_equals_degree", t.e * t.f * t.r == 2,
                                    std::to_string(t.e) + "*" + std::to_string(t.f) + "*" + std::to_string(t.r)});
                return r;
            };
        });
    }
    {
        auto* sub = arith->add_subcommand("principal", "Factor an ideal and test whether it is principal");
        auto D = slot<i64>();
        auto abc = slot<std::vector<i64>>();
        sub->add_option("-D", *D, "Fundamental discriminant")->required();
        sub->add_option("--ideal", *abc, "HNF a,b,c of a*Z + (b + c*w)*Z")->required()->delimiter(',');
        sub->callback([&d, D, abc] {
            d.command = "arith principal";
            d.action = [D, abc] {
                QuadOrder order(*D);
                QuadIdeal I = ideal_from_triple(order, *abc);
                Json factors = Json::array();
                for (const auto& [P, e] : factor_ideal(I)) factors.push_back({{"prime", to_string(P)}, {"exponent", e}});
                RunReport r;
                r.inputs = {{"D", *D}, {"ideal", *abc}};
                r.result = {{"ideal", ideal_json(I)}, {"factorization", factors}};
                if (*D < 0) {
                    auto gen = is_principal_imaginary(I);
                    r.result["form"] = form_text(ideal_form(I));
                    r.result["principal"] = gen.has_value();
                    r.result["generator"] = gen ? Json(to_sqrt_form(*gen)) : Json(nullptr);
                    if (gen) {
                        r.checks.push_back({"generator_spans_ideal", principal_ideal(*gen) == I, to_sqrt_form(*gen)});
                    }
                }
                return r;
            };
        });
    }
}

// ---------------------------------------------------------------- rayclass

Modulus read_modulus(const std::string& field, i64 D, const std::string& text, const std::vector<i64>& abc,
                     const std::vector<int>& places) {
    if (field == "q") return parse_rational_modulus(text.empty() ? "1" : text);
    if (field != "quad") throw DomainError("field must be q or quad");
    QuadOrder order(D);
    if (!order.is_maximal()) throw DomainError("quadratic moduli need a fundamental discriminant");
    if (!abc.empty()) return quadratic_modulus(ideal_from_triple(order, abc), places);
    i64 n = text.empty() ? 1 : std::stoll(text);
    if (n < 1) throw DomainError("modulus must be a positive integer");
    return quadratic_modulus(QuadIdeal(order, n, 0, n), places);
}

void add_rayclass(CLI::App& root, Dispatch& d) {
    auto* rc = root.add_subcommand("rayclass", "Ray class numbers, mod* congruences and weak approximation");
    auto field = slot<std::string>("q");
    auto D = slot<i64>(0);
    auto modulus = slot<std::string>();
    auto abc = slot<std::vector<i64>>();
    auto places = slot<std::vector<int>>();
    auto h = slot<std::optional<i64>>();
    auto brute = slot<bool>(false);
    rc->add_option("--field", *field, "q or quad")->check(CLI::IsMember({"q", "quad"}));
    rc->add_option("-D", *D, "Fundamental discriminant (quad)");
    rc->add_option("--modulus", *modulus, "Over Q: \"2^3*5*inf\"; over a quadratic field: a positive integer n for (n)");
    rc->add_option("--ideal", *abc, "Finite part as an HNF a,b,c (quad)")->delimiter(',');
    rc->add_option("--place", *places, "Real places 0 and/or 1 (real quad)")->delimiter(',');
    rc->add_option("--class-number", *h, "Class number h, required for real quadratic fields");
    rc->add_flag("--brute", *brute, "Cross-check h_m by enumerating residues (Q only)");

    rc->callback([&d, field, D, modulus, abc, places, h, brute] {
        if (d.action) return;  // a nested subcommand already chose the action
        d.command = "rayclass";
        d.action = [=] {
            Modulus m = read_modulus(*field, *D, *modulus, *abc, *places);
            RayClassReport rep = ray_class_number(m, *h);
            RunReport r;
            r.inputs = {{"field", *field}, {"modulus", to_string(m)}};
            if (*field == "quad") r.inputs["D"] = *D;
            if (*h) r.inputs["h"] = **h;
            Rational phi = rep.norm_m0 * rep.euler_factor;
            r.result = {{"modulus", to_string(m)},
                        {"h_m", rep.h_m},
                        {"components",
                         {{"two_power_s", rep.two_power_s},
                          {"norm_m0", rep.norm_m0},
                          {"euler_factor", rational_json(rep.euler_factor)},
                          {"phi_m0", rational_json(phi)},
                          {"h", rep.h},
                          {"h_source", to_string(rep.h_source)},
                          {"unit_index", rep.unit_index}}}};
            Rational recomposed = rep.two_power_s * phi * rep.h / rep.unit_index;
            r.checks.push_back({"formula_recomposes", recomposed == rep.h_m,
                                std::to_string(rep.two_power_s) + "*" + to_string(phi) + "*" + std::to_string(rep.h) +
                                    "/" + std::to_string(rep.unit_index)});
            if (*brute) {
                if (!m.is_rational()) throw DomainError("--brute is only available over Q");
                i64 count = ray_class_count_bruteforce_q(m);
                r.result["bruteforce"] = count;
                r.checks.push_back({"matches_bruteforce", count == rep.h_m, "enumerated " + std::to_string(count)});
            }
            return r;
        };
    });

    {
        auto* sub = rc->add_subcommand("congruent", "Test x = y (mod* m) over Q");
        auto x = slot<std::string>();
        auto y = slot<std::string>();
        auto mod = slot<std::string>();
        sub->add_option("-x", *x, "Nonzero rational, e.g. 3/7")->required();
        sub->add_option("-y", *y, "Nonzero rational")->required();
        sub->add_option("--modulus", *mod, "Rational modulus, e.g. 2^3*5*inf")->required();
        sub->callback([&d, x, y, mod] {
            d.command = "rayclass congruent";
            d.action = [x, y, mod] {
                Modulus m = parse_rational_modulus(*mod);
                Rational qx = parse_rational(*x), qy = parse_rational(*y);
                RunReport r;
                r.inputs = {{"x", to_string(qx)}, {"y", to_string(qy)}, {"modulus", to_string(m)}};
                r.result = {{"congruent", congruent_mod_star(qx, qy, m)}};
                return r;
            };
        });
    }
    {
        auto* sub = rc->add_subcommand("approx", "Find x = y (mod* m) and x = z (mod* m') over Q");
        auto y = slot<std::string>();
        auto z = slot<std::string>();
        auto m1 = slot<std::string>();
        auto m2 = slot<std::string>();
        sub->add_option("-y", *y, "Target modulo m")->required();
        sub->add_option("-z", *z, "Target modulo m'")->required();
        sub->add_option("--m1", *m1, "First modulus")->required();
        sub->add_option("--m2", *m2, "Second modulus")->required();
        sub->callback([&d, y, z, m1, m2] {
            d.command = "rayclass approx";
            d.action = [y, z, m1, m2] {
                Modulus a = parse_rational_modulus(*m1), b = parse_rational_modulus(*m2);
                Rational qy = parse_rational(*y), qz = parse_rational(*z);
                Rational x = weak_approx_q(qy, qz, a, b);
                RunReport r;
                r.inputs = {{"y", to_string(qy)}, {"z", to_string(qz)}, {"m1", to_string(a)}, {"m2", to_string(b)}};
                r.result = {{"x", to_string(x)}};
                r.checks.push_back({"x_congruent_y_mod_m1", congruent_mod_star(x, qy, a), to_string(a)});
                r.checks.push_back({"x_congruent_z_mod_m2", congruent_mod_star(x, qz, b), to_string(b)});
                return r;
            };
        });
    }
}

// ---------------------------------------------------------------- artin

void add_artin(CLI::App& root, Dispatch& d, const Globals& g) {
    auto* artin = root.add_subcommand("artin", "Frobenius elements, the Artin map and splitting patterns");
    artin->require_subcommand(1);
    {
        auto* sub = artin->add_subcommand("frobenius", "Frobenius of p in Gal(Q(zeta_m)/Q) = (Z/m)*");
        auto p = slot<u64>();
        auto m = slot<u64>();
        sub->add_option("-p", *p, "Prime not dividing m")->required();
        sub->add_option("-m", *m, "Cyclotomic level m")->required();
        sub->callback([&d, p, m] {
            d.command = "artin frobenius";
            d.action = [p, m] {
                if (!is_prime(*p)) throw DomainError(std::to_string(*p) + " is not prime");
                Frobenius fr = frobenius_cyclotomic(*p, *m);
                DecompositionType t = decomposition_type_cyclotomic(*p, *m);
                RunReport r;
                r.inputs = {{"p", *p}, {"m", *m}};
                r.result = {{"element", fr.element.value},
                            {"modulus", fr.element.modulus},
                            {"order", fr.order},
                            {"decomposition", {{"e", t.e}, {"f", t.f}, {"r", t.r}}}};
                r.checks.push_back({"order_equals_residue_degree", fr.order == t.f,
                                    "ord = " + std::to_string(fr.order) + ", f = " + std::to_string(t.f)});
                return r;
            };
        });
    }
    {
        auto* sub = artin->add_subcommand("decompose", "(e, f, r) of p in Q(zeta_m)");
        auto p = slot<u64>();
        auto m = slot<u64>();
        sub->add_option("-p", *p, "Prime")->required();
        sub->add_option("-m", *m, "Cyclotomic level m")->required();
        sub->callback([&d, p, m] {
            d.command = "artin decompose";
            d.action = [p, m] {
                if (!is_prime(*p)) throw DomainError(std::to_string(*p) + " is not prime");
                DecompositionType t = decomposition_type_cyclotomic(*p, *m);
                RunReport r;
                r.inputs = {{"p", *p}, {"m", *m}};
                r.result = {{"e", t.e}, {"f", t.f}, {"r", t.r}};
                r.checks.push_back({"efr_equals_phi", t.e * t.f * t.r == euler_phi(*m),
                                    "phi(m) = " + std::to_string(euler_phi(*m))});
                return r;
            };
        });
    }
    {
        auto* sub = artin->add_subcommand("map", "Artin symbol of a positive rational coprime to m");
        auto x = slot<std::string>();
        auto m = slot<u64>();
        sub->add_option("--value", *x, "Rational a/b")->required();
        sub->add_option("-m", *m, "Cyclotomic level m")->required();
        sub->callback([&d, x, m] {
            d.command = "artin map";
            d.action = [x, m] {
                Rational q = parse_rational(*x);
                ResidueClass c = artin_map_q(q, *m);
                RunReport r;
                r.inputs = {{"value", to_string(q)}, {"m", *m}};
                r.result = {{"element", c.value}, {"modulus", c.modulus}};
                return r;
            };
        });
    }
    {
        auto* sub = artin->add_subcommand("kernel", "Sample x = 1 (mod* m*inf) and check the Artin map kills it");
        auto m = slot<u64>();
        auto samples = slot<u64>(1000);
        sub->add_option("-m", *m, "Cyclotomic level m")->required();
        sub->add_option("--samples", *samples, "Number of sampled elements");
        sub->callback([&d, &g, m, samples] {
            d.command = "artin kernel";
            d.action = [&g, m, samples] {
                ArtinKernelReport k = verify_artin_kernel(*m, *samples, g.seed);
                Json bad = Json::array();
                for (const Rational& q : k.counterexamples) bad.push_back(to_string(q));
                RunReport r;
                r.inputs = {{"m", *m}, {"samples", *samples}, {"seed", g.seed}};
                r.result = {{"samples", k.samples}, {"in_kernel", k.in_kernel}, {"counterexamples", bad}};
                r.checks.push_back({"kernel_contains_ray", k.in_kernel == k.samples,
                                    std::to_string(k.in_kernel) + "/" + std::to_string(k.samples)});
                return r;
            };
        });
    }
    {
        auto* sub = artin->add_subcommand("pattern", "Degrees of the irreducible factors of f mod p");
        auto poly = slot<std::string>();
        auto p = slot<u64>();
        sub->add_option("--poly", *poly, "Integer polynomial, e.g. x^4+1")->required();
        sub->add_option("-p", *p, "Prime")->required();
        sub->callback([&d, poly, p] {
            d.command = "artin pattern";
            d.action = [poly, p] {
                if (!is_prime(*p)) throw DomainError(std::to_string(*p) + " is not prime");
                IntPolynomial f = parse_polynomial(*poly);
                SplittingPattern pat = splitting_pattern(f, *p);
                RunReport r;
                r.inputs = {{"poly", to_string(f)}, {"p", *p}};
                r.result = {{"pattern", to_string(pat)}, {"degrees", pat.degrees}};
                int total = 0;
                for (int k : pat.degrees) total += k;
                r.checks.push_back({"degrees_sum_to_degree", total == f.degree(), std::to_string(total)});
                return r;
            };
        });
    }
}

// ---------------------------------------------------------------- padic

PadicNumber padic_input(const std::string& text, u64 p, int prec) {
    if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
    if (prec < 1) throw DomainError("precision must be positive");
    return PadicNumber::from_rational(parse_rational(text), p, prec);
}

Json padic_json(const PadicNumber& x) {
    Json j = {{"text", to_string(x)}, {"absolute_precision", x.absolute_precision()}};
    if (x.is_zero()) {
        j["valuation"] = nullptr;
        j["unit"] = nullptr;
    } else {
        j["valuation"] = x.valuation();
        j["unit"] = x.unit().get_str();
        j["precision"] = x.precision();
    }
    return j;
}

void add_padic(CLI::App& root, Dispatch& d) {
    auto* padic = root.add_subcommand("padic", "p-adic numbers and Hilbert symbols");
    padic->require_subcommand(1);
    {
        auto* sub = padic->add_subcommand("hilbert", "(a, b)_v at one place");
        auto a = slot<std::string>();
        auto b = slot<std::string>();
        auto place = slot<std::string>();
        auto cross = slot<bool>(false);
        sub->add_option("-a", *a, "Nonzero rational")->required();
        sub->add_option("-b", *b, "Nonzero rational")->required();
        sub->add_option("--place", *place, "A prime, or inf")->required();
        sub->add_flag("--cross-check", *cross, "Also decide the symbol by searching solutions mod p^k");
        sub->callback([&d, a, b, place, cross] {
            d.command = "padic hilbert";
            d.action = [a, b, place, cross] {
                Rational qa = parse_rational(*a), qb = parse_rational(*b);
                Place v = parse_place(*place);
                int s = hilbert_symbol(qa, qb, v);
                RunReport r;
                r.inputs = {{"a", to_string(qa)}, {"b", to_string(qb)}, {"place", to_string(v)}};
                r.result = {{"symbol", s}};
                if (*cross && !v.is_infinite()) {
                    int t = hilbert_symbol_search(qa, qb, v.prime);
                    r.checks.push_back({"search_agrees", s == t, "search gives " + std::to_string(t)});
                }
                return r;
            };
        });
    }
    {
        auto* sub = padic->add_subcommand("product", "Hilbert symbols at every relevant place and their product");
        auto a = slot<std::string>();
        auto b = slot<std::string>();
        sub->add_option("-a", *a, "Nonzero rational")->required();
        sub->add_option("-b", *b, "Nonzero rational")->required();
        sub->callback([&d, a, b] {
            d.command = "padic product";
            d.action = [a, b] {
                Rational qa = parse_rational(*a), qb = parse_rational(*b);
                HilbertProduct hp = hilbert_product(qa, qb);
                RunReport r;
                r.inputs = {{"a", to_string(qa)}, {"b", to_string(qb)}};
                r.result = {{"symbols", place_key_json(hp)}, {"product", hp.product}};
                r.checks.push_back({"product_formula", hp.product == 1, "product " + std::to_string(hp.product)});
                return r;
            };
        });
    }
    auto unary = [&](const char* name, const char* help, auto fn) {
        auto* sub = padic->add_subcommand(name, help);
        auto p = slot<u64>();
        auto value = slot<std::string>();
        auto prec = slot<int>(kDefaultPadicPrecision);
        sub->add_option("-p", *p, "Prime")->required();
        sub->add_option("--value", *value, "Rational input")->required();
        sub->add_option("--prec", *prec, "Relative precision");
        std::string command = std::string("padic ") + name;
        sub->callback([&d, p, value, prec, command, fn] {
            d.command = command;
            d.action = [p, value, prec, fn] {
                PadicNumber x = padic_input(*value, *p, *prec);
                RunReport r;
                r.inputs = {{"p", *p}, {"value", *value}, {"prec", *prec}};
                r.result = {{"input", padic_json(x)}};
                fn(x, r);
                return r;
            };
        });
    };
    unary("exp", "exp(x) for v_p(x) >= 1 (>= 2 when p = 2)", [](const PadicNumber& x, RunReport& r) {
        PadicNumber y = padic_exp(x);
        r.result["exp"] = padic_json(y);
        bool in_domain = x.prime() != 2 || (y.unit() % 4 == 1);
        if (in_domain) {
            PadicNumber back = padic_log(y);
            r.checks.push_back({"log_exp_roundtrip", back.agrees_with(x), to_string(back)});
        }
    });
    unary("log", "log(u) for u = 1 (mod p)", [](const PadicNumber& u, RunReport& r) {
        PadicNumber y = padic_log(u);
        r.result["log"] = padic_json(y);
        bool in_domain = u.prime() == 2 ? (!y.is_zero() && y.valuation() >= 2) || y.is_zero()
                                        : y.is_zero() || y.valuation() >= 1;
        if (in_domain && (u.prime() != 2 || u.unit() % 4 == 1)) {
            PadicNumber back = padic_exp(y);
            r.checks.push_back({"exp_log_roundtrip", back.agrees_with(u), to_string(back)});
        }
    });
    unary("sqrt", "Square root by Hensel lifting", [](const PadicNumber& a, RunReport& r) {
        auto root = hensel_sqrt(a, a.is_zero() ? kDefaultPadicPrecision : a.precision());
        r.result["square"] = root.has_value();
        r.result["root"] = root ? padic_json(*root) : Json(nullptr);
        if (root) r.checks.push_back({"root_squares_to_input", ((*root) * (*root)).agrees_with(a), to_string(*root)});
    });
    {
        auto* sub = padic->add_subcommand("power", "Whether a p-adic unit is an n-th power");
        auto p = slot<u64>();
        auto value = slot<std::string>();
        auto n = slot<u64>();
        auto prec = slot<int>(kDefaultPadicPrecision);
        sub->add_option("-p", *p, "Prime")->required();
        sub->add_option("--value", *value, "p-adic unit as a rational")->required();
        sub->add_option("-n", *n, "Exponent n")->required();
        sub->add_option("--prec", *prec, "Relative precision");
        sub->callback([&d, p, value, n, prec] {
            d.command = "padic power";
            d.action = [p, value, n, prec] {
                PadicNumber u = padic_input(*value, *p, *prec);
                RunReport r;
                r.inputs = {{"p", *p}, {"value", *value}, {"n", *n}, {"prec", *prec}};
                r.result = {{"nth_power", is_nth_power_unit(u, *n)}};
                return r;
            };
        });
    }
}

// ---------------------------------------------------------------- cohom

std::size_t exact_sqrt(std::size_t n) {
    auto r = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(n))));
    if (r * r != n) throw DomainError("action must be a square matrix given row-major");
    return r;
}

void add_cohom(CLI::App& root, Dispatch& d) {
    auto* cohom = root.add_subcommand("cohom", "Tate cohomology of cyclic group modules");
    cohom->require_subcommand(1);
    auto* sub = cohom->add_subcommand("herbrand", "H^0, H^1 and the Herbrand quotient");
    auto perm = slot<std::vector<unsigned>>();
    auto relations = slot<std::vector<long>>();
    auto action = slot<std::vector<long>>();
    auto n = slot<unsigned>(0);
    sub->add_option("--perm", *perm, "n d: Z^d permuted cyclically by a group of order n")->expected(2);
    sub->add_option("--relations", *relations, "Relation matrix, k rows, row-major, comma-separated")->delimiter(',');
    sub->add_option("--action", *action, "k x k action matrix, row-major, comma-separated")->delimiter(',');
    sub->add_option("-n", *n, "Group order");
    sub->callback([&d, perm, relations, action, n] {
        d.command = "cohom herbrand";
        d.action = [perm, relations, action, n] {
            CyclicModule A;
            RunReport r;
            if (!perm->empty()) {
                if (!action->empty() || !relations->empty()) throw DomainError("--perm excludes --action/--relations");
                A = build_permutation_module((*perm)[0], (*perm)[1]);
                r.inputs = {{"perm", *perm}};
            } else {
                if (action->empty() || *n == 0) throw DomainError("give --perm n d, or --action with -n");
                std::size_t k = exact_sqrt(action->size());
                if (relations->size() % k != 0) throw DomainError("relations must have k rows");
                A.n = *n;
                A.action = IntMatrix::from_row_major(k, k, *action);
                A.relations = IntMatrix::from_row_major(k, relations->size() / k, *relations);
                validate(A);
                r.inputs = {{"n", *n}, {"action", *action}, {"relations", *relations}};
            }
            HerbrandResult h = herbrand_components(A);
            r.result = {{"n", A.n},
                        {"rank", A.rank()},
                        {"h0", shape_json(h.h0)},
                        {"h1", shape_json(h.h1)},
                        {"q", h.q ? Json(to_string(*h.q)) : Json(nullptr)}};
            return r;
        };
    });
}

// ---------------------------------------------------------------- forms

void add_forms(CLI::App& root, Dispatch& d, const Globals& g) {
    auto* forms = root.add_subcommand("forms", "Positive definite binary quadratic forms");
    forms->require_subcommand(1);
    {
        auto* sub = forms->add_subcommand("represent", "Write p = Q_D(x, y) with Q_D the principal form");
        auto p = slot<u64>();
        auto D = slot<i64>();
        sub->add_option("-p", *p, "Prime")->required();
        sub->add_option("-D", *D, "Negative discriminant")->required();
        sub->callback([&d, p, D] {
            d.command = "forms represent";
            d.action = [p, D] {
                if (!is_prime(*p)) throw DomainError(std::to_string(*p) + " is not prime");
                BinaryQuadraticForm Q = principal_form(*D);
                auto w = represent_prime(*p, *D);
                RunReport r;
                r.inputs = {{"p", *p}, {"D", *D}};
                r.result = {{"form", form_text(Q)},
                            {"represented", w.has_value()},
                            {"witness", w ? Json({{"x", w->x}, {"y", w->y}}) : Json(nullptr)}};
                if (w) {
                    bool ok = Q.evaluate(w->x, w->y) == static_cast<i128>(*p);
                    r.checks.push_back({"witness_evaluates_to_p", ok, "Q(" + std::to_string(w->x) + ", " +
                                                                          std::to_string(w->y) + ")"});
                }
                return r;
            };
        });
    }
    {
        auto* sub = forms->add_subcommand("reduce", "Gauss reduction of a positive definite form");
        auto abc = slot<std::vector<i64>>();
        sub->add_option("--form", *abc, "a,b,c")->required()->delimiter(',');
        sub->callback([&d, abc] {
            d.command = "forms reduce";
            d.action = [abc] {
                if (abc->size() != 3) throw DomainError("form must be given as a,b,c");
                BinaryQuadraticForm f{(*abc)[0], (*abc)[1], (*abc)[2]};
                Reduction red = reduce_form_with_transform(f);
                const SL2Z& m = red.transform;
                RunReport r;
                r.inputs = {{"form", *abc}};
                r.result = {{"reduced", form_text(red.form)},
                            {"coefficients", {red.form.a, red.form.b, red.form.c}},
                            {"transform", {m.p, m.q, m.r, m.s}}};
                r.checks.push_back({"transform_maps_input", apply(f, m) == red.form, form_text(apply(f, m))});
                r.checks.push_back({"result_is_reduced", red.form.is_reduced(), form_text(red.form)});
                return r;
            };
        });
    }
    {
        auto* sub = forms->add_subcommand("classes", "Reduced forms of discriminant D");
        auto D = slot<i64>();
        sub->add_option("-D", *D, "Negative discriminant")->required();
        sub->callback([&d, D] {
            d.command = "forms classes";
            d.action = [D] {
                ClassNumberResult c = class_number_neg(*D);
                Json list = Json::array();
                Table t{{"a", "b", "c"}};
                for (const auto& f : c.forms) {
                    list.push_back({f.a, f.b, f.c});
                    t.push_back({std::to_string(f.a), std::to_string(f.b), std::to_string(f.c)});
                }
                RunReport r;
                r.inputs = {{"D", *D}};
                r.result = {{"h", c.h}, {"forms", list}};
                r.table = std::move(t);
                return r;
            };
        });
    }
    {
        auto* sub = forms->add_subcommand("sweep", "Compare p = Q_D(x, y) with the (D/p), g_D criterion for p <= limit");
        auto D = slot<i64>();
        auto gd = slot<std::string>();
        auto limit = slot<u64>(100'000);
        sub->add_option("-D", *D, "Negative discriminant")->required();
        sub->add_option("--gd", *gd, "Certifying polynomial g_D");
        sub->add_option("--limit", *limit, "Largest prime tested");
        sub->callback([&d, &g, D, gd, limit] {
            d.command = "forms sweep";
            d.action = [&g, D, gd, limit] {
                if (*limit > kDensitySoftCap) throw LimitError("forms sweep is capped at 10^7");
                std::optional<IntPolynomial> poly;
                if (!gd->empty()) poly = parse_polynomial(*gd);
                CriterionChecker checker(*D, poly);
                std::vector<u64> primes, excluded;
                for (u64 p : sieve_primes(2, *limit)) (checker.excluded(p) ? excluded : primes).push_back(p);
                std::vector<CriterionResult> results(primes.size());
                parallel_chunks<int>(0, primes.size(), g.workers, [&](u64 lo, u64 hi) {
                    for (u64 i = lo; i < hi; ++i) results[i] = checker.check(primes[i]);
                    return 0;
                });
                Table t{{"p", "represented", "criterion", "witness_x", "witness_y"}};
                u64 represented = 0, agree = 0;
                Json disagreements = Json::array();
                for (std::size_t i = 0; i < primes.size(); ++i) {
                    const CriterionResult& c = results[i];
                    represented += c.represented;
                    agree += c.agree;
                    if (!c.agree && disagreements.size() < 20) disagreements.push_back(primes[i]);
                    t.push_back({std::to_string(primes[i]), c.represented ? "1" : "0", c.criterion ? "1" : "0",
                                 c.witness ? std::to_string(c.witness->x) : "",
                                 c.witness ? std::to_string(c.witness->y) : ""});
                }
                RunReport r;
                r.inputs = {{"D", *D}, {"gd", poly ? Json(to_string(*poly)) : Json(nullptr)}, {"limit", *limit}};
                r.result = {{"primes", primes.size()},
                            {"represented", represented},
                            {"agree", agree},
                            {"excluded_primes", excluded},
                            {"class_number", checker.class_number()},
                            {"first_disagreements", disagreements}};
                r.checks.push_back({"criterion_matches_representation", agree == primes.size(),
                                    std::to_string(agree) + "/" + std::to_string(primes.size()) + " agree"});
                r.table = std::move(t);
                return r;
            };
        });
    }
}

// ---------------------------------------------------------------- density

std::map<SplittingPattern, double> parse_expectations(const std::vector<std::string>& specs) {
    std::map<SplittingPattern, double> out;
    for (const std::string& s : specs) {
        auto eq = s.rfind('=');
        if (eq == std::string::npos) throw DomainError("expected PATTERN=VALUE, got " + s);
        out[parse_pattern(s.substr(0, eq))] = parse_rational(s.substr(eq + 1)).get_d();
    }
    return out;
}

void add_density(CLI::App& root, Dispatch& d, const Globals& g) {
    auto* density = root.add_subcommand("density", "Empirical prime densities and ideal-count slopes");
    density->require_subcommand(1);
    auto X = slot<u64>(1'000'000);
    auto large = slot<bool>(false);
    auto segment = slot<u64>(kDefaultSegment);
    auto tol = slot<std::optional<double>>();
    auto common = [&](CLI::App* sub) {
        sub->add_option("-X", *X, "Bound (default 10^6)");
        sub->add_flag("--large", *large, "Allow X up to 10^8");
        sub->add_option("--segment", *segment, "Sieve segment length");
    };
    auto options = [&g, segment] {
        DensityOptions o;
        o.workers = g.workers;
        o.segment = *segment;
        return o;
    };
    auto with_tolerance = [tol](RunReport& r, const FrequencyReport& f) {
        if (!*tol) return;
        std::ostringstream s;
        s << "max |freq - expected| = " << f.max_abs_deviation;
        r.checks.push_back({"within_tolerance", f.max_abs_deviation <= **tol, s.str()});
    };

    {
        auto* sub = density->add_subcommand("progression", "Primes in residue classes mod n");
        auto n = slot<u64>();
        sub->add_option("-n", *n, "Modulus n >= 3")->required();
        sub->add_option("--tol", *tol, "Fail when some class deviates more than this");
        common(sub);
        sub->callback([&d, n, X, large, options, with_tolerance] {
            d.command = "density progression";
            d.action = [&d, n, X, large, options, with_tolerance] {
                check_density_bound(*X, *large);
                *d.err << "sieving primes up to " << *X << "\n";
                FrequencyReport f = progression_density(*n, *X, options());
                RunReport r;
                r.inputs = {{"n", *n}, {"X", *X}};
                r.result = frequency_json(f);
                r.table = frequency_table(f);
                with_tolerance(r, f);
                return r;
            };
        });
    }
    {
        auto* sub = density->add_subcommand("split", "Split / inert / ramified primes of a quadratic field");
        auto D = slot<i64>();
        sub->add_option("-D", *D, "Fundamental discriminant")->required();
        sub->add_option("--tol", *tol, "Fail when some class deviates more than this");
        common(sub);
        sub->callback([&d, D, X, large, options, with_tolerance] {
            d.command = "density split";
            d.action = [&d, D, X, large, options, with_tolerance] {
                check_density_bound(*X, *large);
                *d.err << "sieving primes up to " << *X << "\n";
                FrequencyReport f = quadratic_split_density(*D, *X, options());
                RunReport r;
                r.inputs = {{"D", *D}, {"X", *X}};
                r.result = frequency_json(f);
                r.table = frequency_table(f);
                with_tolerance(r, f);
                return r;
            };
        });
    }
    {
        auto* sub = density->add_subcommand("pattern", "Splitting-pattern frequencies of f mod p");
        auto poly = slot<std::string>();
        auto expect = slot<std::vector<std::string>>();
        sub->add_option("--poly", *poly, "Integer polynomial, e.g. x^3-2")->required();
        sub->add_option("--expect", *expect, "PATTERN=VALUE, e.g. {1,1,1,1}=1/4 (repeatable)");
        sub->add_option("--tol", *tol, "Fail when some pattern deviates more than this");
        common(sub);
        sub->callback([&d, poly, expect, X, large, options, with_tolerance] {
            d.command = "density pattern";
            d.action = [&d, poly, expect, X, large, options, with_tolerance] {
                check_density_bound(*X, *large);
                IntPolynomial f = parse_polynomial(*poly);
                auto expected = parse_expectations(*expect);
                *d.err << "sieving primes up to " << *X << "\n";
                FrequencyReport rep = poly_pattern_density(f, *X, expected, options());
                RunReport r;
                r.inputs = {{"poly", to_string(f)}, {"X", *X}, {"expect", *expect}};
                r.result = frequency_json(rep);
                r.table = frequency_table(rep);
                with_tolerance(r, rep);
                return r;
            };
        });
    }
    {
        auto* sub = density->add_subcommand("dirichlet", "Partial sums of p^-s over selected primes");
        auto s = slot<double>(1.1);
        auto D = slot<std::optional<i64>>();
        auto n = slot<std::optional<u64>>();
        auto residue = slot<u64>(1);
        sub->add_option("-s", *s, "Exponent in (1, 1.5]");
        sub->add_option("-D", *D, "Select primes split in Q(sqrt(D))");
        sub->add_option("-n", *n, "Select primes = residue (mod n)");
        sub->add_option("--residue", *residue, "Residue r for p = r mod n");
        common(sub);
        sub->callback([&d, s, D, n, residue, X, large, options] {
            d.command = "density dirichlet";
            d.action = [s, D, n, residue, X, large, options] {
                check_density_bound(*X, *large);
                PrimeSelector select = [](u64) { return true; };
                RunReport r;
                r.inputs = {{"s", *s}, {"X", *X}};
                if (*D && *n) throw DomainError("choose -D or -n, not both");
                if (*D) {
                    i64 disc = **D;
                    make_discriminant(disc);
                    select = [disc](u64 p) { return kronecker_symbol(disc, static_cast<i64>(p)) == 1; };
                    r.inputs["D"] = disc;
                } else if (*n) {
                    u64 mod = **n, res = *residue;
                    if (mod == 0) throw DomainError("n must be positive");
                    select = [mod, res](u64 p) { return p % mod == res % mod; };
                    r.inputs["n"] = mod;
                    r.inputs["residue"] = res;
                }
                DirichletSumReport rep = dirichlet_partial_sum(select, *s, *X, options());
                Json cps = Json::array();
                bool monotone = true;
                for (std::size_t i = 0; i < rep.checkpoints.size(); ++i) {
                    cps.push_back({{"X", rep.checkpoints[i].first}, {"sum", rep.checkpoints[i].second}});
                    if (i && rep.checkpoints[i].second < rep.checkpoints[i - 1].second) monotone = false;
                }
                r.result = {{"selected", rep.selected},
                            {"partial_sum", rep.partial_sum},
                            {"reference", rep.reference},
                            {"ratio", rep.ratio},
                            {"checkpoints", cps}};
                r.checks.push_back({"monotone_in_X", monotone, std::to_string(rep.checkpoints.size()) + " checkpoints"});
                return r;
            };
        });
    }
    {
        auto* sub = density->add_subcommand("slope", "j(X, class)/X for each ideal class (d_K < 0)");
        auto D = slot<i64>();
        sub->add_option("-D", *D, "Negative fundamental discriminant")->required();
        common(sub);
        sub->callback([&d, D, X, large, options] {
            d.command = "density slope";
            d.action = [D, X, large, options] {
                check_density_bound(*X, *large);
                SlopeReport rep = ideal_count_slope(*D, *X, options());
                Json classes = Json::array();
                Table t{{"class", "form", "count", "slope"}};
                for (const ClassSlope& c : rep.classes) {
                    classes.push_back({{"class", c.class_index},
                                       {"form", form_text(c.form)},
                                       {"count", c.count},
                                       {"slope", c.slope}});
                    std::ostringstream sl;
                    sl.precision(8);
                    sl << c.slope;
                    t.push_back({std::to_string(c.class_index), form_text(c.form), std::to_string(c.count), sl.str()});
                }
                RunReport r;
                r.inputs = {{"D", *D}, {"X", *X}};
                r.result = {{"classes", classes},
                            {"total", rep.total},
                            {"total_slope", rep.total_slope},
                            {"max_relative_spread", rep.max_relative_spread}};
                r.table = std::move(t);
                return r;
            };
        });
    }
    {
        auto* sub = density->add_subcommand("ideals", "Every ideal of norm <= X with its class (TSV-oriented)");
        auto D = slot<i64>();
        sub->add_option("-D", *D, "Negative fundamental discriminant")->required();
        common(sub);
        sub->callback([&d, &g, D, X, large] {
            d.command = "density ideals";
            d.action = [&g, D, X, large] {
                check_density_bound(*X, *large);
                EnumerationOptions eo;
                eo.workers = g.workers;
                auto entries = enumerate_ideals_up_to_norm(*D, *X, eo);
                Table t{{"norm", "a", "b", "c", "class"}};
                Json rows = Json::array();
                for (const IdealEntry& e : entries) {
                    const QuadIdeal& I = e.ideal;
                    t.push_back({std::to_string(I.norm()), std::to_string(I.a()), std::to_string(I.b()),
                                 std::to_string(I.c()), std::to_string(e.class_index)});
                    rows.push_back({I.norm(), I.a(), I.b(), I.c(), e.class_index});
                }
                RunReport r;
                r.inputs = {{"D", *D}, {"X", *X}};
                r.result = {{"count", entries.size()}, {"columns", {"norm", "a", "b", "c", "class"}}, {"ideals", rows}};
                r.table = std::move(t);
                return r;
            };
        });
    }
}

// ---------------------------------------------------------------- verify

void add_verify(CLI::App& root, Dispatch& d, const Globals& g) {
    auto* verify = root.add_subcommand("verify", "Run acceptance criteria");
    verify->require_subcommand(1);
    auto profile = slot<std::string>("full");
    auto limit = slot<std::optional<u64>>();
    auto gd = slot<std::string>();

    auto run = [&d, &g, profile, limit, gd](std::vector<int> ids, std::string command) {
        d.command = command;
        d.action = [&d, &g, profile, limit, gd, ids] {
            VerifyOptions o;
            o.profile = parse_profile(*profile);
            o.seed = g.seed;
            o.workers = g.workers;
            o.limit = *limit;
            if (!gd->empty()) o.g_d56 = parse_polynomial(*gd);
            RunReport r;
            r.inputs = {{"profile", to_string(o.profile)}, {"seed", o.seed}};
            if (*limit) r.inputs["limit"] = **limit;
            if (!gd->empty()) r.inputs["gd"] = to_string(o.g_d56);
            Json rows = Json::array();
            Table table{{"criterion", "name", "pass", "detail"}};
            for (int id : ids) {
                CheckResult c = run_criterion(id, o);
                *d.err << "[" << c.criterion << "] " << c.name << ": " << (c.pass ? "pass" : "FAIL") << "\n";
                Json row = {{"criterion", c.criterion}, {"name", c.name}, {"pass", c.pass}};
                if (g.timing) row["elapsed_ms"] = c.elapsed_ms;
                rows.push_back(row);
                r.checks.push_back({c.name, c.pass, c.detail});
                table.push_back({std::to_string(c.criterion), c.name, c.pass ? "pass" : "fail", c.detail});
            }
            r.result = {{"criteria", rows}, {"all_pass", r.all_pass()}};
            r.table = std::move(table);
            return r;
        };
    };

    auto* all = verify->add_subcommand("all", "Every criterion");
    all->add_option("--profile", *profile, "quick or full")->check(CLI::IsMember({"quick", "full"}));
    all->add_option("--gd", *gd, "Replacement g_D for the x^2 + 14y^2 criterion");
    all->callback([run] {
        std::vector<int> ids;
        for (std::size_t i = 1; i <= criterion_names().size(); ++i) ids.push_back(static_cast<int>(i));
        run(ids, "verify all");
    });
    for (const std::string& name : criterion_names()) {
        auto* sub = verify->add_subcommand(name, "Criterion " + std::to_string(criterion_id(name)));
        sub->add_option("--profile", *profile, "quick or full")->check(CLI::IsMember({"quick", "full"}));
        sub->add_option("--limit", *limit, "Override the primary bound");
        sub->add_option("--gd", *gd, "Replacement g_D (x2plus14y2 only)");
        sub->callback([run, name] { run({criterion_id(name)}, "verify " + name); });
    }
}

Json error_json(const std::string& command, const std::string& kind, const std::string& message) {
    return {{"command", command}, {"error", {{"type", kind}, {"message", message}}}};
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Globals g;
    g.workers = worker_count_from_env();
    Dispatch d;
    d.err = &err;

    CLI::App app{"Exact class field theory workbench", "cft"};
    app.require_subcommand(1);
    // Global options may follow the subcommand too.
    app.fallthrough();
    app.set_config("--config", "", "key=value configuration file; flags override it");
    app.add_option("--seed", g.seed, "Seed for every random choice");
    app.add_option("--format", g.format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
    app.add_flag("--timing", g.timing, "Record wall time in elapsed_ms (otherwise 0)");
    app.add_option("--workers", g.workers, "Worker threads (default: WORKER_COUNT, else hardware concurrency)")->check(CLI::PositiveNumber);

    add_arith(app, d);
    add_rayclass(app, d);
    add_artin(app, d, g);
    add_padic(app, d);
    add_cohom(app, d);
    add_forms(app, d, g);
    add_density(app, d, g);
    add_verify(app, d, g);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::CallForVersion&) {
        out << "cft 0.1.0\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n\n" << app.help();
        return 2;
    }

    if (!d.action) {
        err << app.help();
        return 2;
    }

    RunReport report;
    auto start = std::chrono::steady_clock::now();
    try {
        report = d.action();
    } catch (const LimitError& e) {
        out << error_json(d.command, "limit_error", e.what()).dump(2) << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        out << error_json(d.command, "domain_error", e.what()).dump(2) << "\n";
        return 1;
    } catch (const std::exception& e) {
        out << error_json(d.command, "error", e.what()).dump(2) << "\n";
        return 1;
    }
    report.command = d.command;
    if (g.timing) {
        report.elapsed_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }

    if (g.format == "tsv") {
        out << to_tsv(report);
    } else {
        out << to_json(report).dump(2) << "\n";
    }
    return report.all_pass() ? 0 : 1;
}

}  // namespace cft::cli
