#include "ltat/constructions.hpp"

#include <numeric>
#include <set>

namespace ltat {

namespace {

std::string sub2(const char* name, int i, int j) {
    return std::string(name) + "_{" + std::to_string(i) + "," + std::to_string(j) + "}";
}

// m copies of C6 tagged u_{i,j} / e_{i,j}, e_{i,6} = u_{i,6} u_{i,1}
void add_C6s(Graph& g, int m) {
    for (int i = 1; i <= m; ++i) {
        std::vector<Id> u(6);
        for (int j = 1; j <= 6; ++j) u[j - 1] = g.add_vertex(sub2("u", i, j));
        for (int j = 1; j <= 6; ++j) g.add_edge(u[j - 1], u[j % 6], sub2("e", i, j));
    }
}

void add_paths(Graph& g, int count, int order, const char* vname, const char* ename) {
    for (int j = 1; j <= count; ++j) {
        std::vector<Id> v(order);
        for (int b = 1; b <= order; ++b) v[b - 1] = g.add_vertex(sub2(vname, j, b));
        for (int b = 1; b < order; ++b) g.add_edge(v[b - 1], v[b], sub2(ename, j, b));
    }
}

void setv(const Graph& g, TotalLabeling& f, const std::string& tag, Weight value) {
    f.vertex_label[*g.find_tag(tag)] = static_cast<int>(value);
}

void sete(const Graph& g, TotalLabeling& f, const std::string& tag, Weight value) {
    f.edge_label[*g.find_tag(tag)] = static_cast<int>(value);
}

ConstructionResult finish(Graph g, TotalLabeling f, int predicted_colors,
                          std::optional<std::vector<Weight>> predicted_weights,
                          std::string provenance) {
    ConstructionResult r;
    r.report = verify_ltal(g, f);
    r.graph = std::move(g);
    r.labeling = std::move(f);
    r.predicted_colors = predicted_colors;
    r.predicted_weights = std::move(predicted_weights);
    r.provenance = std::move(provenance);
    return r;
}

std::vector<Weight> range_weights(Weight lo, Weight hi) {
    std::vector<Weight> out;
    for (Weight w = lo; w <= hi; ++w) out.push_back(w);
    return out;
}

// labels of mC6 + nP6 (y/z tags); reused shifted by 2a for the aP3 family
void assign_mC6_nP6(const Graph& g, TotalLabeling& f, int m, int n, int shift) {
    for (int i = 1; i <= m; ++i) {
        setv(g, f, sub2("u", i, 1), 2 * n + 3 * i - 2 + shift);
        setv(g, f, sub2("u", i, 3), 2 * n + 3 * i - 1 + shift);
        setv(g, f, sub2("u", i, 5), 2 * n + 3 * i + shift);
        setv(g, f, sub2("u", i, 2), 8 * n + 12 * m - 3 * i + 3 + shift);
        setv(g, f, sub2("u", i, 4), 8 * n + 12 * m - 3 * i + 1 + shift);
        setv(g, f, sub2("u", i, 6), 8 * n + 12 * m - 3 * i + 2 + shift);
        sete(g, f, sub2("e", i, 1), 8 * n + 6 * m + 3 * i - 1 + shift);
        sete(g, f, sub2("e", i, 3), 8 * n + 6 * m + 3 * i + shift);
        // +1 in place of -2 here would collide with u_{m,4}; -2 follows the
        // bare-cycles pattern and tiles [1, 12m+11n] exactly
        sete(g, f, sub2("e", i, 5), 8 * n + 6 * m + 3 * i - 2 + shift);
        sete(g, f, sub2("e", i, 2), 2 * n + 6 * m - 3 * i + 1 + shift);
        sete(g, f, sub2("e", i, 4), 2 * n + 6 * m - 3 * i + 2 + shift);
        sete(g, f, sub2("e", i, 6), 2 * n + 6 * m - 3 * i + 3 + shift);
    }
    for (int t = 1; t <= n; ++t) {
        setv(g, f, sub2("y", t, 1), 8 * n + 6 * m - 3 * t + 2 + shift);
        setv(g, f, sub2("y", t, 3), 8 * n + 6 * m - 3 * t + 3 + shift);
        setv(g, f, sub2("y", t, 5), 8 * n + 6 * m - 3 * t + 1 + shift);
        setv(g, f, sub2("y", t, 2), 2 * n + 6 * m + 3 * t - 2 + shift);
        setv(g, f, sub2("y", t, 4), 2 * n + 6 * m + 3 * t - 1 + shift);
        setv(g, f, sub2("y", t, 6), 2 * n + 6 * m + 3 * t + shift);
        sete(g, f, sub2("z", t, 1), 11 * n + 12 * m + 1 - t + shift);
        sete(g, f, sub2("z", t, 3), 9 * n + 12 * m + 1 - t + shift);
        sete(g, f, sub2("z", t, 5), 10 * n + 12 * m + 1 - t + shift);
        sete(g, f, sub2("z", t, 2), t + shift);
        sete(g, f, sub2("z", t, 4), n + t + shift);
    }
}

}  // namespace

ConstructionResult label_mC6(int m) {
    if (m < 1) throw error(errc::invalid_parameter, "label_mC6: m must be >= 1");
    Graph g;
    add_C6s(g, m);
    TotalLabeling f;
    for (int i = 1; i <= m; ++i) {
        setv(g, f, sub2("u", i, 1), 3 * i - 2);
        setv(g, f, sub2("u", i, 3), 3 * i - 1);
        setv(g, f, sub2("u", i, 5), 3 * i);
        setv(g, f, sub2("u", i, 2), 12 * m + 3 - 3 * i);
        setv(g, f, sub2("u", i, 4), 12 * m + 1 - 3 * i);
        setv(g, f, sub2("u", i, 6), 12 * m + 2 - 3 * i);
        sete(g, f, sub2("e", i, 1), 6 * m - 1 + 3 * i);
        sete(g, f, sub2("e", i, 3), 6 * m + 3 * i);
        sete(g, f, sub2("e", i, 5), 6 * m - 2 + 3 * i);
        sete(g, f, sub2("e", i, 2), 6 * m + 1 - 3 * i);
        sete(g, f, sub2("e", i, 4), 6 * m + 2 - 3 * i);
        sete(g, f, sub2("e", i, 6), 6 * m + 3 - 3 * i);
    }
    return finish(std::move(g), std::move(f), 3, range_weights(12 * m, 12 * m + 2), "thm-mC6");
}

ConstructionResult label_mC6_P6(int m) {
    if (m < 0) throw error(errc::invalid_parameter, "label_mC6_P6: m must be >= 0");
    Graph g;
    add_C6s(g, m);
    std::vector<Id> v(6);
    for (int b = 1; b <= 6; ++b) v[b - 1] = g.add_vertex("v_" + std::to_string(b));
    for (int b = 1; b <= 5; ++b) g.add_edge(v[b - 1], v[b], "h_" + std::to_string(b));
    TotalLabeling f;
    setv(g, f, "v_1", 6 * m + 7);
    setv(g, f, "v_2", 6 * m + 3);
    setv(g, f, "v_3", 6 * m + 8);
    setv(g, f, "v_4", 6 * m + 4);
    setv(g, f, "v_5", 6 * m + 6);
    setv(g, f, "v_6", 6 * m + 5);
    sete(g, f, "h_1", 12 * m + 11);
    sete(g, f, "h_2", 1);
    sete(g, f, "h_3", 12 * m + 9);
    sete(g, f, "h_4", 2);
    sete(g, f, "h_5", 12 * m + 10);
    for (int i = 1; i <= m; ++i) {
        setv(g, f, sub2("u", i, 1), 3 * i);
        setv(g, f, sub2("u", i, 3), 3 * i + 1);
        setv(g, f, sub2("u", i, 5), 3 * i + 2);
        setv(g, f, sub2("u", i, 2), 12 * m + 11 - 3 * i);
        setv(g, f, sub2("u", i, 4), 12 * m + 9 - 3 * i);
        setv(g, f, sub2("u", i, 6), 12 * m + 10 - 3 * i);
        sete(g, f, sub2("e", i, 1), 6 * m + 7 + 3 * i);
        sete(g, f, sub2("e", i, 3), 6 * m + 8 + 3 * i);
        sete(g, f, sub2("e", i, 5), 6 * m + 6 + 3 * i);
        sete(g, f, sub2("e", i, 2), 6 * m + 3 - 3 * i);
        sete(g, f, sub2("e", i, 4), 6 * m + 4 - 3 * i);
        sete(g, f, sub2("e", i, 6), 6 * m + 5 - 3 * i);
    }
    return finish(std::move(g), std::move(f), 3, range_weights(12 * m + 10, 12 * m + 12),
                  "thm-chilt=3");
}

ConstructionResult label_small_cycle(SmallCycle which) {
    int n = 0;
    std::vector<int> seq;  // u_1, e_1, u_2, e_2, ...
    std::vector<Weight> weights;
    switch (which) {
        case SmallCycle::C3:
            n = 3;
            seq = {1, 3, 5, 4, 6, 2};
            weights = {5, 6, 7, 11};
            break;
        case SmallCycle::C5:
            n = 5;
            seq = {1, 2, 7, 8, 5, 6, 3, 4, 9, 10};
            weights = {8, 10, 12, 14};
            break;
        case SmallCycle::C8:
            n = 8;
            seq = {1, 10, 16, 5, 2, 11, 13, 6, 3, 12, 14, 7, 4, 9, 15, 8};
            weights = {15, 16, 17, 18, 19};
            break;
    }
    Graph g;
    std::vector<Id> u(n);
    for (int j = 1; j <= n; ++j) u[j - 1] = g.add_vertex(sub2("u", 1, j));
    for (int j = 1; j <= n; ++j) g.add_edge(u[j - 1], u[j % n], sub2("e", 1, j));
    TotalLabeling f;
    for (int j = 1; j <= n; ++j) {
        setv(g, f, sub2("u", 1, j), seq[2 * (j - 1)]);
        sete(g, f, sub2("e", 1, j), seq[2 * j - 1]);
    }
    int colors = static_cast<int>(weights.size());
    return finish(std::move(g), std::move(f), colors, std::move(weights), "thm-2reg");
}

ConstructionResult label_mC4(int m) {
    if (m < 1) throw error(errc::invalid_parameter, "label_mC4: m must be >= 1");
    Graph g;
    for (int i = 1; i <= m; ++i) {
        std::vector<Id> u(4);
        for (int j = 1; j <= 4; ++j) u[j - 1] = g.add_vertex(sub2("u", i, j));
        for (int j = 1; j <= 4; ++j) g.add_edge(u[j - 1], u[j % 4], sub2("e", i, j));
    }
    TotalLabeling f;
    for (int i = 1; i <= m; ++i) {
        setv(g, f, sub2("u", i, 1), i);
        setv(g, f, sub2("u", i, 2), 7 * m + 1 - i);
        setv(g, f, sub2("u", i, 3), 3 * m + i);
        setv(g, f, sub2("u", i, 4), 6 * m + 1 - i);
        sete(g, f, sub2("e", i, 1), m + i);
        sete(g, f, sub2("e", i, 2), 5 * m + 1 - i);
        sete(g, f, sub2("e", i, 3), 2 * m + i);
        sete(g, f, sub2("e", i, 4), 8 * m + 1 - i);
    }
    std::vector<Weight> weights = {6LL * m + 1, 7LL * m + 1, 9LL * m + 1, 10LL * m + 1};
    return finish(std::move(g), std::move(f), 4, std::move(weights), "thm-2reg");
}

ConstructionResult label_mC6_nP3(int m, int n) {
    if (m < 1 || n < 1)
        throw error(errc::invalid_parameter, "label_mC6_nP3: need m >= 1, n >= 1");
    Graph g;
    add_C6s(g, m);
    add_paths(g, n, 3, "v", "h");
    TotalLabeling f;
    if (n == 1) {
        setv(g, f, sub2("v", 1, 1), 1);
        sete(g, f, sub2("h", 1, 1), 12 * m + 5);
        setv(g, f, sub2("v", 1, 2), 12 * m + 3);
        sete(g, f, sub2("h", 1, 2), 12 * m + 4);
        setv(g, f, sub2("v", 1, 3), 2);
        for (int i = 1; i <= m; ++i) {
            setv(g, f, sub2("u", i, 1), 3 * i);
            setv(g, f, sub2("u", i, 3), 3 * i + 1);
            setv(g, f, sub2("u", i, 5), 3 * i + 2);
            setv(g, f, sub2("u", i, 2), 12 * m + 5 - 3 * i);
            setv(g, f, sub2("u", i, 4), 12 * m + 3 - 3 * i);
            setv(g, f, sub2("u", i, 6), 12 * m + 4 - 3 * i);
            sete(g, f, sub2("e", i, 1), 6 * m + 1 + 3 * i);
            sete(g, f, sub2("e", i, 3), 6 * m + 2 + 3 * i);
            sete(g, f, sub2("e", i, 5), 6 * m + 3 * i);
            sete(g, f, sub2("e", i, 2), 6 * m + 3 - 3 * i);
            sete(g, f, sub2("e", i, 4), 6 * m + 4 - 3 * i);
            sete(g, f, sub2("e", i, 6), 6 * m + 5 - 3 * i);
        }
        std::vector<Weight> weights = {12LL * m + 4, 12LL * m + 5, 12LL * m + 6, 24LL * m + 9};
        return finish(std::move(g), std::move(f), 4, std::move(weights), "thm-mC6nP3");
    }
    for (int j = 1; j <= n; ++j) {
        setv(g, f, sub2("v", j, 1), j);
        sete(g, f, sub2("h", j, 1), 5 * n + 12 * m + 1 - j);
        setv(g, f, sub2("v", j, 2), 3 * n + 12 * m + 1 - j);
        sete(g, f, sub2("h", j, 2), 3 * n + 12 * m + j);
        setv(g, f, sub2("v", j, 3), n + j);
    }
    for (int i = 1; i <= m; ++i) {
        setv(g, f, sub2("u", i, 1), 2 * n + 3 * i - 2);
        setv(g, f, sub2("u", i, 3), 2 * n + 3 * i - 1);
        setv(g, f, sub2("u", i, 5), 2 * n + 3 * i);
        setv(g, f, sub2("u", i, 2), 2 * n + 12 * m + 3 - 3 * i);
        setv(g, f, sub2("u", i, 4), 2 * n + 12 * m + 1 - 3 * i);
        setv(g, f, sub2("u", i, 6), 2 * n + 12 * m + 2 - 3 * i);
        sete(g, f, sub2("e", i, 1), 2 * n + 6 * m - 1 + 3 * i);
        sete(g, f, sub2("e", i, 3), 2 * n + 6 * m + 3 * i);
        sete(g, f, sub2("e", i, 5), 2 * n + 6 * m - 2 + 3 * i);
        sete(g, f, sub2("e", i, 2), 2 * n + 6 * m + 1 - 3 * i);
        sete(g, f, sub2("e", i, 4), 2 * n + 6 * m + 2 - 3 * i);
        sete(g, f, sub2("e", i, 6), 2 * n + 6 * m + 3 - 3 * i);
    }
    // pendant weights [3n+12m+1, 5n+12m] plus the midpoint weight 8n+24m+1
    std::vector<Weight> weights = range_weights(3LL * n + 12 * m + 1, 5LL * n + 12 * m);
    weights.push_back(8LL * n + 24 * m + 1);
    return finish(std::move(g), std::move(f), 2 * n + 1, std::move(weights), "thm-mC6nP3");
}

ConstructionResult label_mC6_nP6(int m, int n) {
    if (m < 1 || n < 1)
        throw error(errc::invalid_parameter, "label_mC6_nP6: need m >= 1, n >= 1");
    Graph g;
    add_C6s(g, m);
    add_paths(g, n, 6, "y", "z");
    TotalLabeling f;
    assign_mC6_nP6(g, f, m, n, 0);
    std::vector<Weight> weights = range_weights(9LL * n + 12 * m + 1, 11LL * n + 12 * m + 1);
    return finish(std::move(g), std::move(f), 2 * n + 1, std::move(weights), "thm-mC6+nP6");
}

ConstructionResult label_mC6_nP6_aP3(int m, int n, int a) {
    if (m < 1 || n < 1 || a < 1)
        throw error(errc::invalid_parameter, "label_mC6_nP6_aP3: need m, n >= 1, a >= 1");
    Graph g;
    add_C6s(g, m);
    add_paths(g, n, 6, "y", "z");
    add_paths(g, a, 3, "v", "h");
    TotalLabeling f;
    assign_mC6_nP6(g, f, m, n, 2 * a);
    const Weight B = 12LL * m + 11 * n;
    for (int r = 1; r <= a; ++r) {
        setv(g, f, sub2("v", r, 1), r);
        sete(g, f, sub2("h", r, 1), B + 5 * a + 1 - r);
        setv(g, f, sub2("v", r, 2), B + 3 * a + 1 - r);
        sete(g, f, sub2("h", r, 2), B + 3 * a + r);
        setv(g, f, sub2("v", r, 3), a + r);
    }
    // The interior weight w(z_{t,1}) = 10n+12m+4a is constant across the P6
    // components while the pendant weights w(y_{t,1}) sweep an interval that
    // contains it once n >= 2a: at t0 = n-2a+1 a pendant vertex and its own
    // edge would share a weight. A vertex-label swap moves the affected
    // interior weights onto colors the palette already contains.
    std::string repair_note;
    bool extra_colors = false;
    if (n >= 2 * a) {
        auto swap_labels = [&](const std::string& ta, const std::string& tb) {
            int& la = f.vertex_label.at(*g.find_tag(ta));
            int& lb = f.vertex_label.at(*g.find_tag(tb));
            std::swap(la, lb);
        };
        const int t0 = n - 2 * a + 1;
        if (n >= 2 * a + 1) {
            swap_labels(sub2("y", t0, 1), sub2("y", t0 - 1, 5));
            repair_note = "incident-weight repair: swapped labels of y_{" +
                          std::to_string(t0) + ",1} and y_{" + std::to_string(t0 - 1) + ",5}";
        } else if (a >= 2) {
            swap_labels(sub2("y", 1, 1), sub2("y", a + 1, 1));
            repair_note = "incident-weight repair: swapped labels of y_{1,1} and y_{" +
                          std::to_string(a + 1) + ",1}";
        } else {  // n == 2, a == 1
            swap_labels(sub2("y", 1, 1), sub2("y", 2, 5));
            repair_note = "incident-weight repair: swapped labels of y_{1,1} and y_{2,5}";
            extra_colors = true;
        }
    }

    // predicted weights from the stated weight formulas
    std::set<Weight> w;
    for (Weight d : {0, 1, 2}) w.insert(10LL * n + 12 * m + 4 * a + d);  // mC6
    w.insert(9LL * n + 12 * m + 4 * a + 1);                              // nP6 interior
    w.insert(11LL * n + 12 * m + 4 * a + 1);
    for (int t = 1; t <= n; ++t) {
        w.insert(11LL * n + 12 * m + 2 * a + 1 - t);
        w.insert(10LL * n + 12 * m + 2 * a + 1 - t);
    }
    for (int r = 1; r <= a; ++r) {
        w.insert(B + 5 * a + 1 - r);  // v_{r,1}
        w.insert(B + 3 * a + r);      // v_{r,3}
    }
    w.insert(B + 3 * a + 1);                     // h_{r,1}
    w.insert(B + 4 * a + 1);                     // h_{r,2}
    w.insert(22LL * n + 24 * m + 8 * a + 1);     // v_{r,2}
    if (extra_colors)
        for (Weight d : {-4, 4, 5}) w.insert(10LL * n + 12 * m + 4 * a + d);
    ConstructionResult r = finish(std::move(g), std::move(f), static_cast<int>(w.size()),
                                  std::vector<Weight>(w.begin(), w.end()), "thm-mC6+nP6+aP3");
    if (a == 1) {
        r.warning = true;
        r.note = "a=1 is outside the stated hypothesis a >= 2";
        if (!repair_note.empty()) r.note += "; " + repair_note;
    } else if (!repair_note.empty()) {
        r.note = repair_note;
    }
    return r;
}

ConstructionResult extend_pendants(const ConstructionResult& base, const ExtensionSpec& spec) {
    const Graph& g0 = base.graph;
    if (!g0.has_vertex(spec.target))
        throw error(errc::extension_spec_invalid, "extend_pendants: target vertex not in base graph");
    const int k = spec.k, s = spec.s;
    if (k < 1 || s < 1 || static_cast<long long>(k) * s < 2)
        throw error(errc::extension_spec_invalid, "extend_pendants: need k,s >= 1 and ks >= 2");
    if (base.labeling.vertex_label.at(spec.target) != k)
        throw error(errc::extension_spec_invalid,
                    "extend_pendants: k must equal the base label of the target vertex");

    const int PQ = g0.order() + g0.size();
    Graph h = g0;
    std::vector<std::vector<Id>> x(s + 1, std::vector<Id>(k + 1));
    std::vector<std::vector<Id>> pe(s + 1, std::vector<Id>(k + 1));
    for (int j = 1; j <= s; ++j)
        for (int i = 1; i <= k; ++i) {
            x[j][i] = h.add_vertex(sub2("x", j, i));
            pe[j][i] = h.add_edge(spec.target, x[j][i], sub2("e'", j, i));
        }

    auto formula_labels = [&](TotalLabeling& f) {
        for (int j = 1; j <= s; ++j)
            for (int i = 1; i <= k; ++i) {
                f.vertex_label[x[j][i]] = PQ + 2 * (j - 1) * k + i;
                f.edge_label[pe[j][i]] = PQ + 2 * j * k + 1 - i;
            }
    };

    ConstructionResult out;
    out.provenance = base.provenance + "+thm-HfromG/thm-HfromG2";

    TotalLabeling f = base.labeling;
    formula_labels(f);
    std::string variant = "direct formula";
    if (k == 1 && s >= 3 && s % 2 == 1) {
        std::swap(f.edge_label[pe[(s + 1) / 2][1]], f.edge_label[pe[(s - 1) / 2][1]]);
        variant = "k=1 odd-s swap";
    } else if (k >= 3 && k % 2 == 1) {
        for (int j = 1; j <= s; ++j)
            std::swap(f.edge_label[pe[j][(k + 1) / 2]], f.edge_label[pe[j][(k - 1) / 2]]);
        variant = "odd-k swap";
    }
    VerificationReport report = verify_ltal(h, f);
    if (!report.valid && k == 1) {
        // rotate the s block edge labels of the pre-swap formula by one block
        f = base.labeling;
        formula_labels(f);
        std::vector<int> orig(s + 1);
        for (int j = 1; j <= s; ++j) orig[j] = f.edge_label[pe[j][1]];
        for (int j = 1; j <= s; ++j) f.edge_label[pe[j][1]] = orig[j % s + 1];
        report = verify_ltal(h, f);
        variant = "k=1 rotation repair";
    }
    if (!report.valid) {
        out.note = "construction-unverified (" + variant + ")";
    } else {
        out.note = variant;
    }

    // predicted count from the weight-set arithmetic of the extension proof
    WeightProfile base_wp = weight_profile(g0, base.labeling);
    const Weight wv = base_wp.vertex_weight.at(spec.target);
    int wv_mult = 0;
    std::set<Weight> predicted;
    for (const auto& [id, w] : base_wp.vertex_weight) {
        predicted.insert(w);
        if (w == wv) ++wv_mult;
    }
    for (const auto& [id, w] : base_wp.edge_weight) {
        predicted.insert(w);
        if (w == wv) ++wv_mult;
    }
    if (wv_mult == 1) predicted.erase(wv);
    Weight new_label_sum = 0;
    for (int j = 1; j <= s; ++j)
        for (int i = 1; i <= k; ++i) {
            predicted.insert(PQ + (2LL * j - 1) * k + i);
            new_label_sum += PQ + (2LL * j - 1) * k + i;
        }
    predicted.insert(wv + new_label_sum);

    out.graph = std::move(h);
    out.labeling = std::move(f);
    out.report = std::move(report);
    out.predicted_colors = static_cast<int>(predicted.size());
    out.predicted_weights = std::vector<Weight>(predicted.begin(), predicted.end());
    out.warning = base.warning;
    return out;
}

ExtensionPrediction predict_extension_conditions(ExtensionFamily family, const std::string& role,
                                                 int k, int s, int m, int n, int a) {
    if (k < 1 || s < 1 || static_cast<long long>(k) * s < 2)
        throw error(errc::not_covered, "extension prediction needs k,s >= 1 with ks >= 2");

    ConstructionResult base;
    Weight target_offset = 0;  // the one non-edge-label weight minus (p+q) of the base
    Weight pendant_base = 0;
    switch (family) {
        case ExtensionFamily::mC6_nP3:
            if (m < 1 || n < 2)
                throw error(errc::not_covered, "mC6+nP3 extension requires m >= 1, n >= 2");
            base = label_mC6_nP3(m, n);
            // midpoint weight 8n+24m+1 vs base p+q = 5n+12m
            target_offset = 3LL * n + 12 * m + 1;
            pendant_base = 2LL * n;
            break;
        case ExtensionFamily::mC6_nP6_aP3:
            if (m < 1 || n < 1 || a < 2)
                throw error(errc::not_covered, "mC6+nP6+aP3 extension requires m,n >= 1, a >= 2");
            if (!(n >= 2 * a + 2 || a >= 2 * n))
                throw error(errc::not_covered, "requires n >= 2a+2 or a >= 2n");
            base = label_mC6_nP6_aP3(m, n, a);
            // midpoint weight 22n+24m+8a+1 vs base p+q = 11n+12m+5a
            target_offset = 11LL * n + 12 * m + 3 * a + 1;
            pendant_base = 2LL * n + 2 * a;
            break;
    }

    auto vid = base.graph.find_tag(role);
    if (!vid || !base.graph.has_vertex(*vid))
        throw error(errc::not_covered, "role does not name a vertex of the family");
    if (base.labeling.vertex_label.at(*vid) != k)
        throw error(errc::not_covered, "k does not match the base label of the named vertex");

    // chi is tight iff the one non-edge-label weight lands among the new
    // pendant edge labels: exists j' <= s with (2j'-1)k+1 <= offset <= 2j'k
    bool tight = false;
    for (long long jp = 1; jp <= s; ++jp)
        if ((2 * jp - 1) * static_cast<long long>(k) + 1 <= target_offset &&
            target_offset <= 2 * jp * static_cast<long long>(k)) {
            tight = true;
            break;
        }

    ExtensionPrediction pred;
    pred.lower = static_cast<Weight>(k) * s + pendant_base + 1;
    pred.upper = tight ? pred.lower : pred.lower + 1;
    pred.tight = tight;
    return pred;
}

}  // namespace ltat
