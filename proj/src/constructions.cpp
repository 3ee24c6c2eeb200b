#include "specsat/constructions.hpp"

#include "specsat/canonical.hpp"
#include "specsat/errors.hpp"

#include <cmath>
#include <stdexcept>

namespace specsat {

Graph build_n4() {
    Graph g(12, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 4}, {2, 5}});
    for (int i = 0; i < 3; ++i) {
        g = g.add_edge(3 + i, 6 + 2 * i);
        g = g.add_edge(3 + i, 7 + 2 * i);
    }
    return g;
}

int FamilySpec::z_vertices() const {
    int total = 0;
    for (int i = 2; i <= 7; ++i) total += i * count(i);
    return total;
}

namespace {

Graph z_component(int i) {
    if (i == 2) return Graph::complete(2);
    if (i == 3) return Graph::complete(3);
    return Graph::star(i - 1); // i in [4,7]: K_{1,i-1}
}

void validate_spec(const FamilySpec& spec) {
    if (spec.t < 2) throw InfeasibleSpec("equality family needs t >= 2");
    for (int i = 2; i <= 7; ++i)
        if (spec.count(i) < 0) throw InfeasibleSpec("negative multiplicity");
    if (spec.z_vertices() != spec.n - 12 * (spec.t - 1))
        throw InfeasibleSpec("infeasible multiplicities: Z covers " +
                                    std::to_string(spec.z_vertices()) + " vertices, needs " +
                                    std::to_string(spec.n - 12 * (spec.t - 1)));
    if (spec.n < 4 * spec.t) throw InfeasibleSpec("family needs n >= 4t");
}

} // namespace

Graph build_equality_family(const FamilySpec& spec) {
    validate_spec(spec);
    Graph g(0);
    for (int k = 0; k < spec.t - 1; ++k) g = g.disjoint_union(build_n4());
    for (int i = 2; i <= 7; ++i)
        for (int k = 0; k < spec.count(i); ++k) g = g.disjoint_union(z_component(i));
    return g;
}

std::optional<FamilySpec> recognize_equality_family(const Graph& g, int t) {
    if (t < 2) return std::nullopt;
    static const CanonicalForm n4_form = canonical(build_n4());
    FamilySpec spec;
    spec.t = t;
    spec.n = g.n();
    int n4_copies = 0;
    for (const ComponentSplit& comp : components(g)) {
        const Graph& c = comp.graph;
        const int cn = c.n();
        if (cn == 12 && c.edge_count() == 12 && canonical(c) == n4_form) {
            ++n4_copies;
        } else if (cn == 2) {
            ++spec.count(2);
        } else if (cn == 3 && c.edge_count() == 3) {
            ++spec.count(3);
        } else if (cn >= 4 && cn <= 7 && c.edge_count() == cn - 1 && c.max_degree() == cn - 1) {
            ++spec.count(cn); // the star K_{1,cn-1}
        } else {
            return std::nullopt;
        }
    }
    if (n4_copies != t - 1) return std::nullopt;
    if (spec.n < 4 * t) return std::nullopt;
    return spec;
}

T1FamilyVerdict recognize_t1_family(const Graph& g) {
    T1FamilyVerdict v;
    v.even_case = g.n() % 2 == 0;
    if (v.even_case) {
        // even n: exactly the perfect matching
        for (const ComponentSplit& comp : components(g))
            if (comp.graph.n() != 2) return v;
        v.x2 = g.n() / 2;
        v.member = g.n() > 0;
        return v;
    }
    for (const ComponentSplit& comp : components(g)) {
        const Graph& c = comp.graph;
        const int cn = c.n();
        const int ce = c.edge_count();
        if (cn == 1) ++v.x1;
        else if (cn == 2) ++v.x2;
        else if (cn == 3 && ce == 3) ++v.x3;
        else if (cn == 4 && ce == 3 && c.max_degree() == 3) ++v.y3;
        else if (cn == 5 && ce == 4 && c.max_degree() == 4) ++v.y4;
        else return v;
    }
    v.member = v.x1 <= 1 && v.x1 * (v.x2 + v.y3 + v.y4) == 0;
    return v;
}

Graph build_conjectured_even_family(int t, int n) {
    if (t < 2) throw InfeasibleSpec("conjectured family needs t >= 2");
    if (n % 2 != 0) throw InfeasibleSpec("even-n family needs even n");
    if (n < 12 * (t - 1)) throw InfeasibleSpec("n too small for t-1 copies of N4");
    FamilySpec spec;
    spec.t = t;
    spec.n = n;
    spec.count(2) = (n - 12 * (t - 1)) / 2;
    return build_equality_family(spec);
}

double ExactRho::value() const {
    return (static_cast<double>(p) + static_cast<double>(q) * std::sqrt(static_cast<double>(root))) /
           static_cast<double>(den);
}

namespace {

constexpr const char* kFig2 = "figure-2 caption";
constexpr const char* kClosed = "closed form";

CatalogEntry fig(const std::string& name, Graph g, double caption) {
    return {name, std::move(g), caption, std::nullopt, kFig2};
}

CatalogEntry exact_entry(const std::string& name, Graph g, ExactRho e) {
    return {name, std::move(g), e.value(), e, kClosed};
}

ExactRho root_of_cubic() { return {1, 1, 17, 2}; } // (1 + sqrt 17)/2

std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> cat;

    cat.push_back(exact_entry("F1", Graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {2, 0}}), root_of_cubic()));
    cat.push_back(exact_entry("F2", Graph(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}}), root_of_cubic()));
    cat.push_back(fig("F3", Graph(7, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {0, 4}, {0, 5}, {0, 6}}), 2.68133));
    cat.push_back(fig("F4", Graph(10, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6},
                                       {1, 7}, {1, 8}, {1, 9}}), 2.60601));
    cat.push_back(fig("F5", Graph(11, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6},
                                       {1, 7}, {1, 8}, {2, 9}, {2, 10}}), 2.61313));
    cat.push_back(fig("F6", Graph(9, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6},
                                      {1, 7}, {1, 8}, {7, 8}}), 2.62386));
    cat.push_back(fig("F7", Graph(9, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5},
                                      {1, 6}, {1, 7}, {1, 8}, {6, 7}}), 2.59305));
    cat.push_back(fig("F8", Graph(15, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5},
                                       {1, 6}, {1, 7}, {1, 8},
                                       {6, 9}, {6, 10}, {7, 11}, {7, 12}, {8, 13}, {8, 14}}), 2.59462));
    cat.push_back(fig("F9", Graph(10, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5},
                                       {1, 6}, {1, 7}, {6, 7}, {6, 8}, {7, 9}}), 2.59688));
    cat.push_back(fig("F10", Graph(11, {{0, 1}, {0, 2}, {0, 3}, {0, 4},
                                        {1, 5}, {1, 6}, {5, 6}, {5, 7}, {6, 8}, {7, 9}, {7, 10}}), 2.56258));
    cat.push_back(fig("F11", Graph(7, {{0, 1}, {1, 2}, {2, 0}, {1, 3}, {1, 4}, {1, 5}, {2, 6}}), 2.59440));
    cat.push_back(fig("F12", Graph(7, {{0, 1}, {1, 2}, {2, 0}, {1, 3}, {1, 4}, {1, 5}, {1, 6}}), 2.68133));
    cat.push_back(fig("F13", Graph(9, {{0, 1}, {1, 2}, {2, 0}, {0, 3},
                                       {1, 4}, {1, 5}, {2, 6}, {3, 7}, {3, 8}}), 2.58059));
    cat.push_back(fig("F14", Graph(13, {{0, 1}, {0, 2}, {0, 3}, {0, 4},
                                        {1, 5}, {1, 6}, {5, 6}, {5, 7}, {6, 8},
                                        {7, 9}, {7, 10}, {8, 11}, {8, 12}}), 2.59748));
    cat.push_back(fig("F15", Graph(10, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2},
                                        {1, 5}, {3, 6}, {3, 7}, {4, 8}, {4, 9}}), 2.57411));
    cat.push_back(fig("F16", Graph(15, {{0, 1}, {0, 2}, {0, 3}, {0, 4},
                                        {1, 5}, {1, 6}, {2, 7}, {2, 8}, {3, 9}, {3, 10},
                                        {4, 11}, {4, 12}, {4, 13}, {4, 14}}), 2.59462));
    cat.push_back(exact_entry("F17", Graph(15, {{0, 1}, {0, 2}, {0, 3}, {0, 4},
                                                {1, 5}, {1, 6}, {2, 7}, {2, 8},
                                                {3, 9}, {3, 10}, {3, 11},
                                                {4, 12}, {4, 13}, {4, 14}}), root_of_cubic()));
    cat.push_back(fig("F18", Graph(20, {{0, 1}, {0, 2}, {0, 3}, {0, 4},
                                        {1, 5}, {1, 6}, {5, 7}, {5, 8},
                                        {2, 9}, {2, 10}, {9, 11}, {9, 12},
                                        {3, 13}, {3, 14}, {13, 15}, {13, 16},
                                        {4, 17}, {4, 18}, {4, 19}}), 2.56761));
    {
        std::vector<std::pair<int, int>> e;
        for (int i = 1; i <= 5; ++i) {
            e.emplace_back(0, i);
            e.emplace_back(i, 2 * i + 4);
            e.emplace_back(i, 2 * i + 5);
        }
        cat.push_back(fig("F19", Graph(16, e), 2.64575));
    }
    cat.push_back(fig("F20", Graph(8, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5},
                                       {1, 2}, {3, 6}, {3, 7}}), 2.58605));

    cat.push_back(exact_entry("N4", build_n4(), root_of_cubic()));
    for (int k = 2; k <= 8; ++k)
        cat.push_back(exact_entry("K" + std::to_string(k), Graph::complete(k), {k - 1, 0, 0, 1}));
    for (int k = 2; k <= 7; ++k)
        cat.push_back(exact_entry("K1," + std::to_string(k), Graph::star(k), {0, 1, k, 1}));
    cat.push_back(exact_entry("P3", Graph::path(3), {0, 1, 2, 1}));
    cat.push_back(exact_entry("P4", Graph::path(4), {1, 1, 5, 2}));
    cat.push_back(exact_entry("P5", Graph::path(5), {0, 1, 3, 1}));
    for (int k = 4; k <= 6; ++k)
        cat.push_back(exact_entry("C" + std::to_string(k), Graph::cycle(k), {2, 0, 0, 1}));
    return cat;
}

} // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> cat = build_catalog();
    return cat;
}

const CatalogEntry& catalog_entry(const std::string& name) {
    for (const CatalogEntry& e : catalog())
        if (e.name == name) return e;
    throw std::invalid_argument("no catalog entry named " + name);
}

} // namespace specsat
