#include "twinfoam/homology.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <sstream>

#include "twinfoam/parallel.hpp"

namespace twinfoam {

void SparseMat::add(int r, int c, const GaussianRational& v) {
    if (v.is_zero()) return;
    auto& row = row_[r];
    auto it = row.find(c);
    if (it == row.end()) {
        row.emplace(c, v);
    } else {
        it->second += v;
        if (it->second.is_zero()) row.erase(it);
    }
}

bool SparseMat::is_zero() const {
    for (const auto& r : row_)
        if (!r.empty()) return false;
    return true;
}

int SparseMat::nonzeros() const {
    int n = 0;
    for (const auto& r : row_) n += int(r.size());
    return n;
}

SparseMat SparseMat::multiply(const SparseMat& other) const {
    SparseMat out(rows_, other.cols_);
    for (int r = 0; r < rows_; ++r)
        for (const auto& [k, v] : row_[r])
            for (const auto& [c, w] : other.row_[k]) out.add(r, c, v * w);
    return out;
}

int SparseMat::rank() const {
    std::vector<std::map<int, GaussianRational>> work = row_;
    std::vector<bool> done(work.size(), false);
    int rank = 0;
    while (true) {
        int pivot_row = -1;
        size_t best = 0;
        for (size_t r = 0; r < work.size(); ++r) {
            if (done[r] || work[r].empty()) continue;
            if (pivot_row < 0 || work[r].size() < best) {
                pivot_row = int(r);
                best = work[r].size();
            }
        }
        if (pivot_row < 0) break;
        ++rank;
        done[pivot_row] = true;
        int pivot_col = work[pivot_row].begin()->first;
        GaussianRational pivot_val = work[pivot_row].begin()->second;
        auto pivot = work[pivot_row];
        for (size_t r = 0; r < work.size(); ++r) {
            if (done[r]) continue;
            auto it = work[r].find(pivot_col);
            if (it == work[r].end()) continue;
            GaussianRational factor = it->second / pivot_val;
            for (const auto& [c, v] : pivot) {
                auto jt = work[r].find(c);
                if (jt == work[r].end()) {
                    GaussianRational nv = -(factor * v);
                    if (!nv.is_zero()) work[r].emplace(c, nv);
                } else {
                    jt->second -= factor * v;
                    if (jt->second.is_zero()) work[r].erase(jt);
                }
            }
        }
    }
    return rank;
}

SparseMat SparseMat::restricted(const std::vector<int>& rows, const std::vector<int>& cols) const {
    std::map<int, int> rpos, cpos;
    for (size_t k = 0; k < rows.size(); ++k) rpos[rows[k]] = int(k);
    for (size_t k = 0; k < cols.size(); ++k) cpos[cols[k]] = int(k);
    SparseMat out(int(rows.size()), int(cols.size()));
    for (size_t k = 0; k < rows.size(); ++k)
        for (const auto& [c, v] : row_[rows[k]]) {
            auto it = cpos.find(c);
            if (it != cpos.end()) out.add(int(k), it->second, v);
        }
    // every selected column must land inside the selected rows
    std::vector<bool> keep_row(rows_, false);
    for (int r : rows) keep_row[r] = true;
    for (int r = 0; r < rows_; ++r) {
        if (keep_row[r]) continue;
        for (const auto& [c, v] : row_[r])
            if (cpos.count(c))
                throw InvariantViolation("differential entry leaves its q-degree block");
    }
    return out;
}

namespace {

int internal_degree(std::uint32_t mask, int factors) {
    int x = std::popcount(mask & ((factors >= 32 ? ~0u : (1u << factors) - 1u)));
    return 2 * x - factors;
}

} // namespace

CochainComplex build_complex(const LinkDiagram& d, const Params& p, const HomologyOptions& opts) {
    CochainComplex cx;
    cx.n_plus = d.n_plus();
    cx.n_minus = d.n_minus();
    cx.params = p;

    int n = d.crossing_count();
    std::uint32_t count = 1u << n;
    cx.resolutions.resize(count);
    parallel_for(count, opts.threads,
                 [&](size_t J) { cx.resolutions[J] = resolve(d, std::uint32_t(J), opts.resolve); });

    if (opts.component_shuffle_seed != 0) {
        for (std::uint32_t J = 0; J < count; ++J) {
            Resolution& r = cx.resolutions[J];
            std::mt19937 rng(opts.component_shuffle_seed * 0x9e3779b9u + J);
            std::vector<size_t> perm(r.components.size());
            std::iota(perm.begin(), perm.end(), size_t(0));
            std::shuffle(perm.begin(), perm.end(), rng);
            Resolution shuffled;
            shuffled.J = r.J;
            for (size_t l : perm) {
                shuffled.components.push_back(std::move(r.components[l]));
                shuffled.type_sequence.push_back(r.type_sequence[l]);
            }
            r = std::move(shuffled);
        }
    }

    // objects: weight class w = |J| sits at cohomological degree w - n_plus
    cx.objects.assign(n + 1, {});
    std::vector<int> offset(count, 0);
    for (std::uint32_t J = 0; J < count; ++J) {
        int w = std::popcount(J);
        int factors = int(cx.resolutions[J].components.size());
        int shift = 2 * cx.n_plus - cx.n_minus - w;
        offset[J] = int(cx.objects[w].size());
        for (std::uint32_t mask = 0; mask < (1u << factors); ++mask) {
            BasisElement b;
            b.J = J;
            b.mask = mask;
            b.factors = factors;
            b.shift = shift;
            b.qdeg = internal_degree(mask, factors) + shift;
            cx.objects[w].push_back(b);
        }
    }

    // edges, with the eager anti-commutativity check face by face
    std::vector<std::vector<CubeEdgeMap>> edges(count); // edges[J][k] for k not in J
    for (std::uint32_t J = 0; J < count; ++J) edges[J].resize(n);
    std::vector<std::pair<std::uint32_t, int>> edge_list;
    for (std::uint32_t J = 0; J < count; ++J)
        for (int k = 0; k < n; ++k)
            if (!((J >> k) & 1u)) edge_list.emplace_back(J, k);
    parallel_for(edge_list.size(), opts.threads, [&](size_t idx) {
        auto [J, k] = edge_list[idx];
        EdgeDescriptor desc = classify_edge(cx.resolutions[J], cx.resolutions[J | (1u << k)], k);
        edges[J][k] = assemble_edge_map(desc, p);
    });

    auto bits = [&](std::uint32_t J) {
        std::string s;
        for (int b = 0; b < n; ++b) s += char('0' + ((J >> b) & 1u));
        return s;
    };

    for (std::uint32_t J = 0; J < count; ++J)
        for (int k = 0; k < n; ++k) {
            if ((J >> k) & 1u) continue;
            for (int l = k + 1; l < n; ++l) {
                if ((J >> l) & 1u) continue;
                const CubeEdgeMap &a1 = edges[J][k], &a2 = edges[J | (1u << k)][l];
                const CubeEdgeMap &b1 = edges[J][l], &b2 = edges[J | (1u << l)][k];
                LinMap sum = (a2.matrix * a1.matrix).scaled(a1.sign * a2.sign) +
                             (b2.matrix * b1.matrix).scaled(b1.sign * b2.sign);
                if (!sum.is_zero())
                    throw D2ViolationError("face J=" + bits(J) + " k=" + std::to_string(k) +
                                           " l=" + std::to_string(l) +
                                           " of the signed cube does not anti-commute");
            }
        }

    cx.differentials.assign(n, SparseMat());
    for (int w = 0; w < n; ++w)
        cx.differentials[w] =
            SparseMat(int(cx.objects[w + 1].size()), int(cx.objects[w].size()));
    for (std::uint32_t J = 0; J < count; ++J) {
        int w = std::popcount(J);
        for (int k = 0; k < n; ++k) {
            if ((J >> k) & 1u) continue;
            const CubeEdgeMap& e = edges[J][k];
            std::uint32_t T = J | (1u << k);
            for (int r = 0; r < e.matrix.rows(); ++r)
                for (int c = 0; c < e.matrix.cols(); ++c) {
                    const GaussianRational& v = e.matrix.at(r, c);
                    if (v.is_zero()) continue;
                    cx.differentials[w].add(offset[T] + r, offset[J] + c,
                                            e.sign > 0 ? v : -v);
                }
        }
    }

    if (cx.graded()) {
        for (int w = 0; w < n; ++w)
            for (int r = 0; r < cx.differentials[w].rows(); ++r)
                for (const auto& [c, v] : cx.differentials[w].row(r))
                    if (cx.objects[w + 1][r].qdeg != cx.objects[w][c].qdeg)
                        throw InvariantViolation(
                            "differential does not preserve the shifted q-degree at a=h=0");
    }

    for (int w = 0; w + 1 < n; ++w)
        if (!cx.differentials[w + 1].multiply(cx.differentials[w]).is_zero())
            throw D2ViolationError("d o d != 0 between weights " + std::to_string(w) + " and " +
                                   std::to_string(w + 2));

    return cx;
}

BigradedDims homology_dims(const CochainComplex& c, int threads) {
    BigradedDims out;
    out.graded = c.graded();
    int levels = int(c.objects.size());

    if (out.graded) {
        // independent exact blocks per (weight, q-degree)
        std::map<std::pair<int, int>, std::vector<int>> block; // (w, q) -> column indices
        for (int w = 0; w < levels; ++w)
            for (size_t idx = 0; idx < c.objects[w].size(); ++idx)
                block[{w, c.objects[w][idx].qdeg}].push_back(int(idx));

        std::vector<std::pair<std::pair<int, int>, const std::vector<int>*>> tasks;
        for (const auto& [key, cols] : block) tasks.emplace_back(key, &cols);
        std::vector<int> ranks(tasks.size(), 0); // rank of d restricted to block (w, q)
        parallel_for(tasks.size(), threads, [&](size_t t) {
            auto [w, q] = tasks[t].first;
            if (w + 1 >= levels) return;
            auto it = block.find({w + 1, q});
            std::vector<int> empty;
            const std::vector<int>& rows = it == block.end() ? empty : it->second;
            ranks[t] = c.differentials[w].restricted(rows, *tasks[t].second).rank();
        });
        std::map<std::pair<int, int>, int> rank_at;
        for (size_t t = 0; t < tasks.size(); ++t) rank_at[tasks[t].first] = ranks[t];

        for (const auto& [key, cols] : block) {
            auto [w, q] = key;
            int dim = int(cols.size()) - rank_at[{w, q}];
            auto below = rank_at.find({w - 1, q});
            if (below != rank_at.end()) dim -= below->second;
            if (dim < 0) throw InvariantViolation("negative homology dimension");
            if (dim > 0) {
                out.by_ij[{c.degree(w), q}] = dim;
                out.by_i[c.degree(w)] += dim;
                out.total += dim;
            }
        }
    } else {
        std::vector<int> ranks(levels, 0);
        parallel_for(size_t(levels), threads, [&](size_t w) {
            if (int(w) + 1 < levels) ranks[w] = c.differentials[w].rank();
        });
        for (int w = 0; w < levels; ++w) {
            int dim = int(c.objects[w].size()) - ranks[w] - (w > 0 ? ranks[w - 1] : 0);
            if (dim < 0) throw InvariantViolation("negative homology dimension");
            if (dim > 0) {
                out.by_i[c.degree(w)] = dim;
                out.total += dim;
            }
        }
    }
    return out;
}

LaurentPolynomial euler_characteristic(const CochainComplex& c) {
    LaurentPolynomial chi;
    for (size_t w = 0; w < c.objects.size(); ++w) {
        int sign = (c.degree(int(w)) % 2 == 0) ? 1 : -1;
        for (const BasisElement& b : c.objects[w])
            chi += LaurentPolynomial::monomial(sign, b.qdeg);
    }
    return chi;
}

std::string BigradedDims::to_string() const {
    std::ostringstream os;
    if (graded) {
        os << "  i    j  dim\n";
        for (const auto& [ij, d] : by_ij) {
            os.width(3);
            os << ij.first;
            os.width(5);
            os << ij.second;
            os.width(5);
            os << d << '\n';
        }
    } else {
        os << "  i  dim\n";
        for (const auto& [i, d] : by_i) {
            os.width(3);
            os << i;
            os.width(5);
            os << d << '\n';
        }
    }
    os << "total " << total << '\n';
    return os.str();
}

namespace {

std::string power(const std::string& var, int e) {
    if (e == 1) return var;
    return var + "^" + std::to_string(e);
}

} // namespace

std::string poincare_string(const BigradedDims& dims) {
    std::ostringstream os;
    bool first = true;
    auto term = [&](int count, int i, int j, bool with_q) {
        if (!first) os << " + ";
        first = false;
        std::vector<std::string> parts;
        if (count != 1) parts.push_back(std::to_string(count));
        if (with_q && j != 0) parts.push_back(power("q", j));
        if (i != 0) parts.push_back(power("t", i));
        if (parts.empty()) parts.push_back("1");
        for (size_t k = 0; k < parts.size(); ++k) os << (k ? "*" : "") << parts[k];
    };
    if (dims.graded) {
        for (const auto& [ij, d] : dims.by_ij) term(d, ij.first, ij.second, true);
    } else {
        for (const auto& [i, d] : dims.by_i) term(d, i, 0, false);
    }
    if (first) os << "0";
    return os.str();
}

} // namespace twinfoam
