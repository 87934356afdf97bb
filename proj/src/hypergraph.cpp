#include "ordramsey/hypergraph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "ordramsey/containment.hpp"

namespace ordramsey {

namespace {

std::size_t comb3(long long x) {
    return x < 3 ? 0 : static_cast<std::size_t>(x * (x - 1) * (x - 2) / 6);
}

} // namespace

TripleColoring::TripleColoring(int N, int q, uint8_t fill)
    : N_(N), q_(q), colors_(comb3(N), fill) {
    if (N < 0 || q < 2) throw std::invalid_argument("TripleColoring: N >= 0, q >= 2 required");
    if (fill >= q) throw std::invalid_argument("TripleColoring: fill color out of range");
}

TripleColoring::TripleColoring(int N, int q, std::vector<uint8_t> colors)
    : N_(N), q_(q), colors_(std::move(colors)) {
    if (N < 0 || q < 2) throw std::invalid_argument("TripleColoring: N >= 0, q >= 2 required");
    if (colors_.size() != comb3(N))
        throw std::invalid_argument("TripleColoring: expected C(N,3) colors");
    for (uint8_t c : colors_)
        if (c >= q) throw std::invalid_argument("TripleColoring: color out of range");
}

std::size_t TripleColoring::triple_index(int i, int j, int k, int N) {
    if (!(1 <= i && i < j && j < k && k <= N))
        throw std::out_of_range("triple_index: need 1 <= i < j < k <= N");
    // triples starting below i, then the pair (j,k) ranked inside {i+1..N}
    return comb3(N) - comb3(N - i + 1) +
           EdgeColoring::pair_index(j - i, k - i, N - i);
}

TripleSystem TripleColoring::color_class(int c) const {
    if (c < 0 || c >= q_) throw std::invalid_argument("color_class: invalid color");
    TripleSystem out;
    out.n = N_;
    std::size_t idx = 0;
    for (int i = 1; i <= N_ - 2; ++i)
        for (int j = i + 1; j <= N_ - 1; ++j)
            for (int k = j + 1; k <= N_; ++k, ++idx)
                if (colors_[idx] == c) out.triples.emplace_back(i, j, k);
    return out;
}

std::vector<Point> points_from_csv(const std::string& text) {
    std::vector<Point> pts;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string trimmed;
        for (char ch : line)
            if (!std::isspace(static_cast<unsigned char>(ch))) trimmed += ch;
        if (trimmed.empty()) continue;
        auto comma = trimmed.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("points_from_csv: line " + std::to_string(lineno) +
                                        " is not \"x,y\"");
        pts.push_back({Rational::parse(trimmed.substr(0, comma)),
                       Rational::parse(trimmed.substr(comma + 1))});
    }
    return pts;
}

TripleColoring capcup_coloring(const std::vector<Point>& points) {
    std::vector<Point> pts = points;
    std::stable_sort(pts.begin(), pts.end(),
                     [](const Point& a, const Point& b) { return a.x < b.x; });
    const int N = static_cast<int>(pts.size());
    for (int i = 1; i < N; ++i)
        if (pts[i - 1].x == pts[i].x)
            throw std::invalid_argument("capcup_coloring: duplicate x coordinate");
    TripleColoring c(N, 2);
    for (int i = 1; i <= N - 2; ++i)
        for (int j = i + 1; j <= N - 1; ++j)
            for (int k = j + 1; k <= N; ++k) {
                const Point &a = pts[i - 1], &b = pts[j - 1], &d = pts[k - 1];
                Rational cross = (b.x - a.x) * (d.y - a.y) - (d.x - a.x) * (b.y - a.y);
                int sgn = cross.sign();
                if (sgn == 0)
                    throw std::invalid_argument("capcup_coloring: collinear triple (" +
                                                std::to_string(i) + "," + std::to_string(j) +
                                                "," + std::to_string(k) + ")");
                c.set_color(i, j, k, sgn > 0 ? kRed : kBlue);  // left turn = cup = red
            }
    return c;
}

std::optional<Embedding> find_monochromatic_tight_path(const TripleColoring& c, int n) {
    const int N = c.N();
    if (n < 1) throw std::invalid_argument("find_monochromatic_tight_path: n >= 1 required");
    if (n > N) return std::nullopt;
    if (n <= 2) {
        std::vector<int> image(n);
        for (int i = 0; i < n; ++i) image[i] = i + 1;
        return Embedding{n, std::move(image)};
    }
    for (int col = 0; col < c.q(); ++col) {
        // len[u][v]: longest tight path in color col ending with (u, v);
        // pairs processed by increasing second coordinate so predecessors
        // (t, u) are final.
        std::vector<std::vector<int>> len(N + 1, std::vector<int>(N + 1, 2));
        std::vector<std::vector<int>> par(N + 1, std::vector<int>(N + 1, 0));
        for (int v = 2; v <= N; ++v)
            for (int u = 1; u < v; ++u)
                for (int w = v + 1; w <= N; ++w)
                    if (c.color(u, v, w) == col && len[u][v] + 1 > len[v][w]) {
                        len[v][w] = len[u][v] + 1;
                        par[v][w] = u;
                    }
        for (int u = 1; u <= N; ++u)
            for (int v = u + 1; v <= N; ++v) {
                if (len[u][v] < n) continue;
                std::vector<int> seq = {v, u};
                int a = u, b = v;
                while (par[a][b] != 0) {
                    int t = par[a][b];
                    seq.push_back(t);
                    b = a;
                    a = t;
                }
                std::reverse(seq.begin(), seq.end());
                seq.resize(n);  // a prefix of a tight path is a tight path
                for (int i = 0; i + 2 < n; ++i)
                    if (c.color(seq[i], seq[i + 1], seq[i + 2]) != col)
                        throw std::logic_error("tight path witness failed verification");
                return Embedding{n, std::move(seq)};
            }
    }
    return std::nullopt;
}

ErdosRadoResult erdos_rado_step(const TripleColoring& c, int t) {
    const int N = c.N();
    if (t < 2) throw std::invalid_argument("erdos_rado_step: t >= 2 required");
    long long need = 1;
    for (int i = 0; i < t * (t - 1) / 2; ++i) need *= 2;
    if (N < need + 1)
        throw std::invalid_argument("erdos_rado_step: N >= 2^C(t,2) + 1 required");

    std::vector<int> v;
    std::vector<int> S;
    for (int x = 2; x <= N; ++x) S.push_back(x);
    v.push_back(1);
    EdgeColoring chi(t, c.q());
    for (int i = 2; i <= t; ++i) {
        if (S.empty()) throw std::logic_error("erdos_rado_step: candidate set exhausted");
        int vi = S.front();
        v.push_back(vi);
        S.erase(S.begin());
        // refine by the i-1 new pairs, keeping the majority color each time
        // (ties towards the lowest color)
        for (int a = 1; a < i; ++a) {
            std::vector<int> count(c.q(), 0);
            for (int w : S) ++count[c.color(v[a - 1], vi, w)];
            int best = 0;
            for (int col = 1; col < c.q(); ++col)
                if (count[col] > count[best]) best = col;
            chi.set_color(a, i, static_cast<uint8_t>(best));
            std::vector<int> kept;
            for (int w : S)
                if (c.color(v[a - 1], vi, w) == best) kept.push_back(w);
            S = std::move(kept);
        }
    }
    if (S.empty()) throw std::logic_error("erdos_rado_step: candidate set exhausted");
    v.push_back(S.front());
    // every triple (v_a, v_b, v_j) with j > b must carry chi(a, b)
    for (int a = 1; a <= t; ++a)
        for (int b = a + 1; b <= t; ++b)
            for (int j = b + 1; j <= t + 1; ++j)
                if (c.color(v[a - 1], v[b - 1], v[j - 1]) != chi.color(a, b))
                    throw std::logic_error("erdos_rado_step: verification failed");
    return {std::move(v), std::move(chi)};
}

namespace {

// Does pattern embed into the colored class with some pattern triple mapped
// exactly onto (x, y, z)?
bool embeds_using(const TripleSystem& pattern, const std::vector<char>& in_class, int N,
                  int x, int y, int z) {
    const int p = pattern.n;
    std::vector<int> image(p + 1, 0);

    auto triple_ok = [&](int a, int b, int cc) {
        return in_class[TripleColoring::triple_index(image[a], image[b], image[cc], N)] != 0;
    };
    // recursive extension in label order; forced vertices already set
    auto rec = [&](auto&& self, int vtx) -> bool {
        if (vtx > p) return true;
        // a pattern triple is fully assigned once its largest label is placed
        auto check_new = [&]() {
            for (const auto& [a, b, cc] : pattern.triples)
                if (cc == vtx && !triple_ok(a, b, cc)) return false;
            return true;
        };
        if (image[vtx] != 0) {
            if (vtx > 1 && image[vtx] <= image[vtx - 1]) return false;
            if (!check_new()) return false;
            return self(self, vtx + 1);
        }
        const int lo = vtx == 1 ? 1 : image[vtx - 1] + 1;
        int hi = N - (p - vtx);
        // do not run past the next forced vertex
        for (int w = vtx + 1; w <= p; ++w)
            if (image[w] != 0) { hi = std::min(hi, image[w] - (w - vtx)); break; }
        for (int u = lo; u <= hi; ++u) {
            image[vtx] = u;
            if (check_new() && self(self, vtx + 1)) return true;
        }
        image[vtx] = 0;
        return false;
    };

    for (const auto& [a, b, cc] : pattern.triples) {
        std::fill(image.begin(), image.end(), 0);
        image[a] = x;
        image[b] = y;
        image[cc] = z;
        if (rec(rec, 1)) return true;
    }
    return false;
}

struct TripleSolver {
    const std::vector<TripleSystem>& targets;
    int N;
    int q;
    std::vector<Triple> order;                    // lexicographic triples of [N]
    std::vector<std::vector<char>> in_class;      // per color, by triple_index
    TripleColoring current;
    bool fix_first = false;

    bool search(std::size_t idx) {
        if (idx == order.size()) return true;  // full avoiding coloring
        const auto& [x, y, z] = order[idx];
        const std::size_t ti = TripleColoring::triple_index(x, y, z, N);
        const int cmax = (idx == 0 && fix_first) ? 1 : q;
        for (int col = 0; col < cmax; ++col) {
            in_class[col][ti] = 1;
            current.set_color(x, y, z, static_cast<uint8_t>(col));
            if (!embeds_using(targets[col], in_class[col], N, x, y, z) &&
                search(idx + 1))
                return true;
            in_class[col][ti] = 0;
        }
        return false;
    }
};

} // namespace

Ramsey3Result ramsey3_decide(const std::vector<TripleSystem>& targets, int N, int size_cap) {
    const int q = static_cast<int>(targets.size());
    if (q < 2) throw std::invalid_argument("ramsey3_decide: at least two targets required");
    if (N > size_cap)
        throw std::invalid_argument("ramsey3_decide: N=" + std::to_string(N) +
                                    " exceeds cap " + std::to_string(size_cap));
    for (const auto& t : targets) {
        validate_triples(t);
        if (t.triples.empty())
            throw std::invalid_argument("ramsey3_decide: target without triples");
    }
    bool diagonal = true;
    for (int i = 1; i < q; ++i)
        if (!(targets[i].n == targets[0].n && targets[i].triples == targets[0].triples))
            diagonal = false;

    TripleSolver solver{targets, N, q, {}, {}, TripleColoring(N, q), diagonal};
    for (int i = 1; i <= N - 2; ++i)
        for (int j = i + 1; j <= N - 1; ++j)
            for (int k = j + 1; k <= N; ++k) solver.order.emplace_back(i, j, k);
    solver.in_class.assign(q, std::vector<char>(solver.order.size(), 0));

    Ramsey3Result res;
    if (solver.search(0)) {
        res.unavoidable = false;
        res.witness = solver.current;
        // verify the witness avoids every target
        for (int col = 0; col < q; ++col)
            if (find_mono_triple_copy(*res.witness, col, targets[col]))
                throw std::logic_error("ramsey3_decide: witness failed verification");
    } else {
        res.unavoidable = true;
    }
    return res;
}

namespace {

bool triple_copy_rec(const TripleColoring& c, int color, const TripleSystem& pattern,
                     int vtx, std::vector<int>& image) {
    const int p = pattern.n;
    if (vtx > p) return true;
    const int lo = vtx == 1 ? 1 : image[vtx - 2] + 1;
    const int hi = c.N() - (p - vtx);
    for (int u = lo; u <= hi; ++u) {
        image[vtx - 1] = u;
        bool ok = true;
        for (const auto& [a, b, d] : pattern.triples) {
            if (d != vtx) continue;  // triples completed by vtx
            if (c.color(image[a - 1], image[b - 1], u) != color) { ok = false; break; }
        }
        if (ok && triple_copy_rec(c, color, pattern, vtx + 1, image)) return true;
    }
    return false;
}

} // namespace

std::optional<Embedding> find_mono_triple_copy(const TripleColoring& c, int color,
                                               const TripleSystem& pattern) {
    if (color < 0 || color >= c.q()) throw std::invalid_argument("invalid color index");
    validate_triples(pattern);
    if (pattern.n > c.N()) return std::nullopt;
    std::vector<int> image(pattern.n);
    if (!triple_copy_rec(c, color, pattern, 1, image)) return std::nullopt;
    return Embedding{pattern.n, std::move(image)};
}

std::string triple_coloring_to_json(const TripleColoring& c) {
    nlohmann::json j;
    j["N"] = c.N();
    j["q"] = c.q();
    j["colors"] = c.colors();
    return j.dump();
}

TripleColoring triple_coloring_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    std::vector<uint8_t> cols = j.at("colors").get<std::vector<uint8_t>>();
    return TripleColoring(j.at("N").get<int>(), j.at("q").get<int>(), std::move(cols));
}

} // namespace ordramsey
