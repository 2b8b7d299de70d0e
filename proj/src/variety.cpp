#include "zetatrace/variety.hpp"

#include "zetatrace/small_field.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <thread>

namespace zetatrace {

Variety parse_variety(const nlohmann::json& doc) {
    Variety V;
    try {
        if (!doc.is_object()) throw ParseError("variety document must be a JSON object");
        V.p = Int(doc.at("p").get<long long>());
        const long long nv = doc.at("num_vars").get<long long>();
        if (nv < 1) throw ParseError("num_vars must be >= 1");
        V.num_vars = static_cast<unsigned>(nv);
        const long long dim = doc.at("dim").get<long long>();
        if (dim < 0) throw ParseError("dim must be >= 0");
        V.dim_hint = static_cast<unsigned>(dim);
        if (doc.contains("betti")) {
            for (const auto& b : doc.at("betti")) {
                const long long v = b.get<long long>();
                if (v < 0) throw ParseError("betti numbers must be >= 0");
                V.betti_hint.push_back(static_cast<unsigned>(v));
            }
            if (V.betti_hint.size() != 2 * V.dim_hint + 1) {
                throw ParseError("betti list must have length 2*dim+1");
            }
            if (V.betti_hint.front() != 1 || V.betti_hint.back() != 1) {
                throw ParseError("betti list must start and end with 1");
            }
        }
        for (const auto& jpoly : doc.at("polys")) {
            Variety::Polynomial poly;
            for (const auto& jmono : jpoly) {
                Variety::Monomial m;
                for (const auto& e : jmono.at("exps")) {
                    const long long v = e.get<long long>();
                    if (v < 0) throw ParseError("exponents must be >= 0");
                    m.exps.push_back(static_cast<unsigned>(v));
                }
                if (m.exps.size() != V.num_vars) {
                    throw ParseError("exponent vector length must equal num_vars");
                }
                m.coeff = ((Int(jmono.at("coeff").get<long long>()) % V.p) + V.p) % V.p;
                if (m.coeff != 0) poly.push_back(std::move(m));
            }
            V.polys.push_back(std::move(poly));
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed variety document: ") + e.what());
    }
    if (!is_prime(V.p)) {
        std::ostringstream os;
        os << "base characteristic " << V.p << " is not prime";
        throw CompositeModulus(os.str(), "variety_counter");
    }
    // Homogeneity: every monomial of one polynomial has the same total degree.
    for (const auto& poly : V.polys) {
        if (poly.empty()) continue;
        auto total = [](const Variety::Monomial& m) {
            unsigned t = 0;
            for (unsigned e : m.exps) t += e;
            return t;
        };
        const unsigned d0 = total(poly.front());
        for (const auto& m : poly) {
            if (total(m) != d0) {
                std::ostringstream os;
                os << "monomial degrees " << d0 << " and " << total(m)
                   << " mixed in one polynomial";
                throw NotHomogeneous(os.str());
            }
        }
    }
    return V;
}

Variety parse_variety_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON in ") + path + ": " + e.what());
    }
    return parse_variety(doc);
}

Int projective_space_size(const Int& q, unsigned m) {
    return (pow_int(q, m + 1) - 1) / (q - 1);
}

namespace detail {

namespace {

// A polynomial specialized to one pivot stratum: the pivot coordinate is 1,
// earlier coordinates are 0, and only the free coordinates (after the pivot)
// survive. Evaluation happens entirely in the log domain.
struct StratumMonomial {
    // (free-coordinate position, exponent) pairs with exponent > 0
    std::vector<std::pair<unsigned, unsigned>> vars;
    std::int32_t coeff_log;  // log of the (nonzero) coefficient
};

struct StratumPoly {
    std::vector<StratumMonomial> monomials;
    std::int32_t constant_log;  // folded monomials with no free variable; -1 = zero
    bool has_constant;          // distinguishes "no constant" from "constant is zero"
};

// Per-monomial, per-variable lookup tables: table[v] = (e * log v) mod (q-1)
// for v != 0, or -1. Folding the coefficient into the first variable's table
// makes a monomial evaluation a handful of adds and compares.
struct MonomialEval {
    std::vector<const std::int32_t*> tables;  // one per participating variable
    std::vector<unsigned> positions;          // free-coordinate index each table reads
};

struct PolyEval {
    std::vector<MonomialEval> monomials;
    std::int32_t constant_log;
    bool has_constant;
};

std::uint64_t run_stratum(const SmallField& gf, const std::vector<StratumPoly>& polys,
                          unsigned free_count, unsigned workers);

}  // namespace

std::uint64_t count_with_tables(const Variety& V, unsigned r, unsigned workers) {
    const FieldDescriptor F = ff_make(V.p, r);
    const SmallField gf(F);
    const std::uint32_t q = gf.q();
    const unsigned m = V.num_vars - 1;

    std::uint64_t total = 0;
    // Pivot strata: coordinates before the pivot are 0, the pivot is 1.
    for (unsigned pivot = 0; pivot <= m; ++pivot) {
        const unsigned free_count = m - pivot;
        std::vector<StratumPoly> specialized;
        bool identically_zero_all = true;
        bool unsatisfiable = false;
        for (const auto& poly : V.polys) {
            StratumPoly sp;
            sp.constant_log = -1;
            sp.has_constant = false;
            std::int32_t const_acc = -1;
            bool const_present = false;
            for (const auto& mono : poly) {
                bool vanishes = false;
                for (unsigned j = 0; j < pivot; ++j) {
                    if (mono.exps[j] > 0) {
                        vanishes = true;
                        break;
                    }
                }
                if (vanishes) continue;
                StratumMonomial sm;
                sm.coeff_log = gf.log(gf.embed_int(mono.coeff));
                for (unsigned j = pivot + 1; j <= m; ++j) {
                    if (mono.exps[j] > 0) sm.vars.emplace_back(j - pivot - 1, mono.exps[j]);
                }
                if (sm.vars.empty()) {
                    // Pivot-only monomial: a constant in this stratum.
                    const_acc = gf.log_add(const_acc, sm.coeff_log);
                    const_present = true;
                } else {
                    sp.monomials.push_back(std::move(sm));
                }
            }
            sp.constant_log = const_acc;
            sp.has_constant = const_present;
            if (!sp.monomials.empty() || (sp.has_constant && sp.constant_log >= 0)) {
                identically_zero_all = false;
            }
            if (sp.monomials.empty()) {
                // The polynomial is constant on this stratum.
                if (sp.has_constant && sp.constant_log >= 0) {
                    unsatisfiable = true;  // nonzero constant: no points here
                    break;
                }
                continue;  // identically zero: no constraint
            }
            specialized.push_back(std::move(sp));
        }
        if (unsatisfiable) continue;
        if (specialized.empty()) {
            // No constraints survive: every point of the stratum counts.
            std::uint64_t size = 1;
            for (unsigned i = 0; i < free_count; ++i) size *= q;
            total += size;
            (void)identically_zero_all;
            continue;
        }
        total += run_stratum(gf, specialized, free_count, workers);
    }
    return total;
}

namespace {

std::uint64_t run_chunk(const SmallField& gf, const std::vector<PolyEval>& polys,
                        unsigned free_count, std::uint32_t q,
                        std::uint64_t begin, std::uint64_t end) {
    // Odometer over free coordinates; coordinate 0 spins fastest.
    std::vector<std::uint32_t> coord(free_count, 0);
    std::uint64_t idx = begin;
    for (unsigned i = 0; i < free_count; ++i) {
        coord[i] = static_cast<std::uint32_t>(idx % q);
        idx /= q;
    }
    std::uint64_t hits = 0;
    for (std::uint64_t step = begin; step < end; ++step) {
        bool all_zero = true;
        for (const auto& pe : polys) {
            std::int32_t acc = pe.has_constant ? pe.constant_log : -1;
            for (const auto& me : pe.monomials) {
                std::int32_t mono_log = 0;
                for (std::size_t t = 0; t < me.tables.size(); ++t) {
                    const std::int32_t lv = me.tables[t][coord[me.positions[t]]];
                    if (lv < 0) {
                        mono_log = -1;
                        break;
                    }
                    mono_log += lv;
                }
                if (mono_log < 0) continue;  // monomial vanished
                const auto qm1 = static_cast<std::int32_t>(gf.qm1());
                while (mono_log >= qm1) mono_log -= qm1;
                acc = gf.log_add(acc, mono_log);
            }
            if (acc >= 0) {
                all_zero = false;
                break;
            }
        }
        if (all_zero) ++hits;
        // Advance the odometer.
        for (unsigned i = 0; i < free_count; ++i) {
            if (++coord[i] < q) break;
            coord[i] = 0;
        }
    }
    return hits;
}

std::uint64_t run_stratum(const SmallField& gf, const std::vector<StratumPoly>& polys,
                          unsigned free_count, unsigned workers) {
    const std::uint32_t q = gf.q();
    const std::uint32_t qm1 = gf.qm1();

    // Build the per-monomial variable tables. The coefficient log hides in
    // the first variable's table so evaluation never adds it separately.
    std::vector<std::vector<std::int32_t>> storage;
    std::vector<PolyEval> evals;
    for (const auto& sp : polys) {
        PolyEval pe;
        pe.constant_log = sp.constant_log;
        pe.has_constant = sp.has_constant;
        for (const auto& sm : sp.monomials) {
            MonomialEval me;
            for (std::size_t t = 0; t < sm.vars.size(); ++t) {
                const auto [pos, e] = sm.vars[t];
                std::vector<std::int32_t> table(q);
                for (std::uint32_t v = 0; v < q; ++v) {
                    const std::int32_t lv = gf.log(v);
                    if (lv < 0) {
                        table[v] = -1;
                    } else {
                        std::int64_t s = static_cast<std::int64_t>(e) * lv;
                        s %= qm1;
                        if (t == 0) s += sm.coeff_log;  // fold the coefficient in
                        table[v] = static_cast<std::int32_t>(s % qm1);
                    }
                }
                storage.push_back(std::move(table));
                me.positions.push_back(pos);
            }
            pe.monomials.push_back(std::move(me));
        }
        evals.push_back(std::move(pe));
    }
    // Pointers are stable once all tables exist.
    std::size_t cursor = 0;
    for (auto& pe : evals) {
        for (auto& me : pe.monomials) {
            for (std::size_t t = 0; t < me.positions.size(); ++t) {
                me.tables.push_back(storage[cursor++].data());
            }
        }
    }

    std::uint64_t space = 1;
    for (unsigned i = 0; i < free_count; ++i) space *= q;

    if (workers <= 1 || space < 2 * workers) {
        return run_chunk(gf, evals, free_count, q, 0, space);
    }
    // Static partition: identical chunk boundaries regardless of scheduling.
    std::vector<std::uint64_t> subtotals(workers, 0);
    std::vector<std::thread> threads;
    const std::uint64_t chunk = space / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t begin = w * chunk;
        const std::uint64_t end = (w + 1 == workers) ? space : begin + chunk;
        threads.emplace_back([&, w, begin, end] {
            subtotals[w] = run_chunk(gf, evals, free_count, q, begin, end);
        });
    }
    for (auto& t : threads) t.join();
    std::uint64_t total = 0;
    for (unsigned w = 0; w < workers; ++w) total += subtotals[w];  // fixed order
    return total;
}

}  // namespace

std::uint64_t count_generic(const Variety& V, unsigned r) {
    // Reference backend: FieldElement arithmetic, no tables. Slow but
    // straightforward; used for cross-validation and for fields beyond the
    // table limit.
    const FieldDescriptor F = ff_make(V.p, r);
    const Int q = F.q();
    const unsigned m = V.num_vars - 1;
    std::uint64_t total = 0;
    std::vector<FieldElement> coords(V.num_vars, ff_zero(F));
    for (unsigned pivot = 0; pivot <= m; ++pivot) {
        for (unsigned j = 0; j < pivot; ++j) coords[j] = ff_zero(F);
        coords[pivot] = ff_one(F);
        const unsigned free_count = m - pivot;
        Int space = pow_int(q, free_count);
        for (Int idx = 0; idx < space; ++idx) {
            Int rest = idx;
            for (unsigned i = 0; i < free_count; ++i) {
                coords[pivot + 1 + i] = ff_from_index(F, rest % q);
                rest /= q;
            }
            bool all_zero = true;
            for (const auto& poly : V.polys) {
                FieldElement acc = ff_zero(F);
                for (const auto& mono : poly) {
                    FieldElement term = ff_from_int(F, mono.coeff);
                    for (unsigned j = 0; j < V.num_vars; ++j) {
                        if (mono.exps[j] > 0) {
                            term = ff_mul(term, ff_pow(coords[j], Int(mono.exps[j])));
                        }
                    }
                    acc = ff_add(acc, term);
                }
                if (!ff_is_zero(acc)) {
                    all_zero = false;
                    break;
                }
            }
            if (all_zero) ++total;
        }
    }
    return total;
}

}  // namespace detail

std::uint64_t count_projective(const Variety& V, unsigned r, std::uint64_t budget,
                               unsigned workers) {
    if (r == 0) throw std::invalid_argument("count_projective: r must be >= 1");
    const Int q = pow_int(V.p, r);
    const Int evals = projective_space_size(q, V.num_vars - 1);
    if (evals > budget) {
        std::ostringstream os;
        os << "counting over F_" << V.p << "^" << r << " needs " << evals
           << " point evaluations, budget " << budget;
        throw EnumerationTooLarge(os.str());
    }
    if (q <= detail::SmallField::kMaxQ) {
        return detail::count_with_tables(V, r, workers);
    }
    return detail::count_generic(V, r);
}

CountSeries count_series(const Variety& V, unsigned R, std::uint64_t budget,
                         unsigned workers) {
    if (R == 0) throw std::invalid_argument("count_series: R must be >= 1");
    // Fail fast on the first infeasible r before spending time on the rest.
    for (unsigned r = 1; r <= R; ++r) {
        const Int evals = projective_space_size(pow_int(V.p, r), V.num_vars - 1);
        if (evals > budget) {
            std::ostringstream os;
            os << "r=" << r << " needs " << evals << " point evaluations, budget "
               << budget;
            throw EnumerationTooLarge(os.str());
        }
    }
    CountSeries cs;
    cs.q = V.p;
    for (unsigned r = 1; r <= R; ++r) {
        cs.counts.push_back(count_projective(V, r, budget, workers));
    }
    return cs;
}

}  // namespace zetatrace
