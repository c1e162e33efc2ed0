#include "boson.hpp"

#include "hecke.hpp"

namespace macuv {

RatFunc fock_step(const BosonGen& g, int m, FockNorm norm, int& out_m) {
    switch (g.kind) {
        case BosonGen::Kind::Phi:
            out_m = m - 1;
            if (m == 0) return RatFunc();
            return norm == FockNorm::Standard ? one_minus_monomial(0, m) : RatFunc(1);
        case BosonGen::Kind::PhiDag:
            out_m = m + 1;
            return norm == FockNorm::Standard ? RatFunc(1) : one_minus_monomial(0, m + 1);
        case BosonGen::Kind::KPow:
            out_m = m;
            return RatFunc(monomial_qtuv(g.qpow * m, g.tpow * m));
    }
    throw Error("fock_step: bad generator");
}

RatMatrix truncated_matrix(const BosonGen& g, int cutoff, FockNorm norm) {
    if (cutoff < 1) throw Error("truncated_matrix: cutoff must be >= 1");
    int dim = cutoff + 1;
    RatMatrix mat(dim, std::vector<RatFunc>(dim));
    for (int m = 0; m < dim; ++m) {
        int out = 0;
        RatFunc c = fock_step(g, m, norm, out);
        if (c.is_zero() || out < 0 || out > cutoff) continue; // phid|N> is dropped
        mat[out][m] = c;
    }
    return mat;
}

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) {
    size_t dim = a.size();
    RatMatrix r(dim, std::vector<RatFunc>(dim));
    for (size_t i = 0; i < dim; ++i) {
        for (size_t k = 0; k < dim; ++k) {
            if (a[i][k].is_zero()) continue;
            for (size_t j = 0; j < dim; ++j) {
                if (b[k][j].is_zero()) continue;
                r[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    return r;
}

RatMatrix mat_sub(const RatMatrix& a, const RatMatrix& b) {
    RatMatrix r = a;
    for (size_t i = 0; i < r.size(); ++i) {
        for (size_t j = 0; j < r.size(); ++j) r[i][j] -= b[i][j];
    }
    return r;
}

RatMatrix mat_identity(int dim) {
    RatMatrix r(dim, std::vector<RatFunc>(dim));
    for (int i = 0; i < dim; ++i) r[i][i] = RatFunc(1);
    return r;
}

namespace {
// Equality on the first `cols` columns only; truncation can corrupt later ones.
bool equal_on_columns(const RatMatrix& a, const RatMatrix& b, int cols) {
    for (size_t i = 0; i < a.size(); ++i) {
        for (int j = 0; j < cols; ++j) {
            if (a[i][j] != b[i][j]) return false;
        }
    }
    return true;
}
} // namespace

Report check_tboson_relations(int cutoff) {
    if (cutoff < 2) throw Error("check_tboson_relations: cutoff must be >= 2");
    Report report;
    RatFunc t = RatFunc::variable(Param::t);
    RatMatrix phi = truncated_matrix(BosonGen::phi(), cutoff);
    RatMatrix phid = truncated_matrix(BosonGen::phi_dag(), cutoff);
    RatMatrix k = truncated_matrix(BosonGen::k(), cutoff);

    auto scaled = [&](const RatMatrix& m, const RatFunc& c) {
        RatMatrix r = m;
        for (auto& row : r) {
            for (auto& entry : row) entry *= c;
        }
        return r;
    };

    report.record(equal_on_columns(mat_mul(phi, k), scaled(mat_mul(k, phi), t), cutoff),
                  "phi k = t k phi");
    report.record(equal_on_columns(scaled(mat_mul(phid, k), t), mat_mul(k, phid), cutoff),
                  "t phid k = k phid");
    RatMatrix lhs = mat_sub(mat_mul(phi, phid), scaled(mat_mul(phid, phi), t));
    RatMatrix rhs = scaled(mat_identity(cutoff + 1), RatFunc(1) - t);
    report.record(equal_on_columns(lhs, rhs, cutoff), "phi phid - t phid phi = (1-t) id");
    return report;
}

RatFunc braket(const BosonWord& word, int m_out, int m_in, int cutoff, FockNorm norm) {
    int raises = 0;
    for (const auto& g : word.gens) {
        if (g.kind == BosonGen::Kind::PhiDag) ++raises;
    }
    if (m_in + raises > cutoff || m_out > cutoff)
        throw Error("braket: cutoff insufficient for requested states");
    int m = m_in;
    RatFunc coeff = word.scalar;
    for (auto it = word.gens.rbegin(); it != word.gens.rend(); ++it) {
        int out = 0;
        RatFunc c = fock_step(*it, m, norm, out);
        if (c.is_zero()) return RatFunc();
        coeff *= c;
        m = out;
        if (m > cutoff) throw Error("braket: cutoff exceeded");
    }
    return m == m_out ? coeff : RatFunc();
}

TraceCell trace_apply(const TraceCell& cell, const BosonGen& g) {
    TraceCell next;
    int d = cell.offset;
    switch (g.kind) {
        case BosonGen::Kind::Phi: {
            // multiply by (1 - t^d z), lower the offset
            next.offset = d - 1;
            for (const auto& [zw, c] : cell.coeff) {
                next.coeff[zw] += c;
                RatFunc weight = RatFunc(monomial_qtuv(0, d >= 0 ? d : 0));
                if (d < 0) weight = RatFunc(1) / RatFunc(monomial_qtuv(0, -d));
                auto bumped = std::make_pair(zw.first + 1, zw.second);
                next.coeff[bumped] -= c * weight;
            }
            break;
        }
        case BosonGen::Kind::PhiDag:
            next.offset = d + 1;
            next.coeff = cell.coeff;
            break;
        case BosonGen::Kind::KPow: {
            next.offset = d;
            RatFunc weight(1);
            int tp = g.tpow * d, qp = g.qpow * d;
            if (tp >= 0 && qp >= 0) {
                weight = RatFunc(monomial_qtuv(qp, tp));
            } else {
                weight = RatFunc(monomial_qtuv(qp > 0 ? qp : 0, tp > 0 ? tp : 0)) /
                         RatFunc(monomial_qtuv(qp < 0 ? -qp : 0, tp < 0 ? -tp : 0));
            }
            for (const auto& [zw, c] : cell.coeff) {
                next.coeff[{zw.first + g.tpow, zw.second + g.qpow}] += c * weight;
            }
            break;
        }
    }
    for (auto it = next.coeff.begin(); it != next.coeff.end();) {
        it = it->second.is_zero() ? next.coeff.erase(it) : std::next(it);
    }
    return next;
}

RatFunc trace_close(const TraceCell& cell) {
    if (cell.offset != 0) return RatFunc();
    RatFunc total;
    for (const auto& [zw, c] : cell.coeff) {
        if (zw.first == 0 && zw.second == 0)
            throw Error("trace_close: divergent trace (missing twist weight)");
        total += c / one_minus_monomial(zw.second, zw.first);
    }
    return total;
}

} // namespace macuv
