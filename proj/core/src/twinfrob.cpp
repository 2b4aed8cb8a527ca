#include "twinfoam/twinfrob.hpp"

#include <sstream>
#include <stdexcept>

namespace twinfoam {

LinMap LinMap::identity(int n) {
    LinMap out(n, n);
    for (int k = 0; k < n; ++k) out.at(k, k) = GaussianRational(1);
    return out;
}

LinMap LinMap::scaled(const GaussianRational& s) const {
    LinMap out(rows_, cols_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) out.at(r, c) = at(r, c) * s;
    return out;
}

LinMap operator+(const LinMap& a, const LinMap& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::logic_error("LinMap shape mismatch in +");
    LinMap out(a.rows_, a.cols_);
    for (int r = 0; r < a.rows_; ++r)
        for (int c = 0; c < a.cols_; ++c) out.at(r, c) = a.at(r, c) + b.at(r, c);
    return out;
}

LinMap operator-(const LinMap& a, const LinMap& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::logic_error("LinMap shape mismatch in -");
    LinMap out(a.rows_, a.cols_);
    for (int r = 0; r < a.rows_; ++r)
        for (int c = 0; c < a.cols_; ++c) out.at(r, c) = a.at(r, c) - b.at(r, c);
    return out;
}

LinMap operator*(const LinMap& a, const LinMap& b) {
    if (a.cols_ != b.rows_) throw std::logic_error("LinMap shape mismatch in composition");
    LinMap out(a.rows_, b.cols_);
    for (int r = 0; r < a.rows_; ++r)
        for (int k = 0; k < a.cols_; ++k) {
            if (a.at(r, k).is_zero()) continue;
            for (int c = 0; c < b.cols_; ++c) {
                if (b.at(k, c).is_zero()) continue;
                out.at(r, c) += a.at(r, k) * b.at(k, c);
            }
        }
    return out;
}

bool operator==(const LinMap& a, const LinMap& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    return a.m_ == b.m_;
}

std::vector<GaussianRational> LinMap::apply(const std::vector<GaussianRational>& v) const {
    if (int(v.size()) != cols_) throw std::logic_error("LinMap apply size mismatch");
    std::vector<GaussianRational> out(rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            if (!at(r, c).is_zero()) out[r] += at(r, c) * v[c];
    return out;
}

bool LinMap::is_zero() const {
    for (const auto& x : m_)
        if (!x.is_zero()) return false;
    return true;
}

std::string LinMap::to_string() const {
    std::ostringstream os;
    for (int r = 0; r < rows_; ++r) {
        os << '[';
        for (int c = 0; c < cols_; ++c) {
            if (c) os << ' ';
            os << at(r, c).to_string();
        }
        os << ']';
        if (r + 1 < rows_) os << '\n';
    }
    return os.str();
}

LinMap tensor(const LinMap& a, const LinMap& b) {
    LinMap out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int ra = 0; ra < a.rows(); ++ra)
        for (int ca = 0; ca < a.cols(); ++ca) {
            if (a.at(ra, ca).is_zero()) continue;
            for (int rb = 0; rb < b.rows(); ++rb)
                for (int cb = 0; cb < b.cols(); ++cb) {
                    if (b.at(rb, cb).is_zero()) continue;
                    out.at(ra * b.rows() + rb, ca * b.cols() + cb) = a.at(ra, ca) * b.at(rb, cb);
                }
        }
    return out;
}

LinMap flip2() {
    LinMap t(4, 4);
    t.at(0, 0) = 1;
    t.at(1, 2) = 1;
    t.at(2, 1) = 1;
    t.at(3, 3) = 1;
    return t;
}

namespace {
const GaussianRational kI = GaussianRational::i();
const GaussianRational kHalf(make_rational(1, 2));
} // namespace

// m(1(x)1)=1, m(1(x)X)=m(X(x)1)=X, m(X(x)X)=hX+a; shared by both structures.
LinMap m_C(const Params& p) {
    LinMap m(2, 4);
    m.at(0, 0) = 1;
    m.at(1, 1) = 1;
    m.at(1, 2) = 1;
    m.at(0, 3) = p.a;
    m.at(1, 3) = p.h;
    return m;
}

// Delta(1) = 1(x)X + X(x)1 - h 1(x)1, Delta(X) = X(x)X + a 1(x)1.
LinMap delta_C(const Params& p) {
    LinMap d(4, 2);
    d.at(0, 0) = -p.h;
    d.at(1, 0) = 1;
    d.at(2, 0) = 1;
    d.at(0, 1) = p.a;
    d.at(3, 1) = 1;
    return d;
}

LinMap iota_C(const Params&) {
    LinMap u(2, 1);
    u.at(0, 0) = 1;
    return u;
}

LinMap eps_C(const Params&) {
    LinMap e(1, 2);
    e.at(0, 1) = 1;
    return e;
}

LinMap m_W(const Params& p) { return m_C(p); }
LinMap delta_W(const Params& p) { return delta_C(p).scaled(kI); }
LinMap iota_W(const Params& p) { return iota_C(p); }
LinMap eps_W(const Params& p) { return eps_C(p).scaled(-kI); }

LinMap z1(const Params&) { return LinMap::identity(2); }
LinMap z1s(const Params&) { return LinMap::identity(2).scaled(-kI); }

LinMap z2(const Params& p) {
    LinMap z(2, 2);
    z.at(0, 0) = 1;
    z.at(0, 1) = p.h;
    z.at(1, 1) = -1;
    return z;
}

LinMap z2s(const Params& p) { return z2(p).scaled(kI); }
LinMap f_map(const Params& p) { return z2s(p) * z1(p); }
LinMap g_map(const Params& p) { return z1s(p) * z2(p); }

LinMap basis_to_plus(const Params& p) { return z2(p); } // 1 -> 1, X -> h - X; an involution
LinMap basis_from_plus(const Params& p) { return z2(p); }

namespace {

// Multiplication by X on A: 1 -> X, X -> hX + a.
LinMap mul_by_x(const Params& p) {
    LinMap m(2, 2);
    m.at(1, 0) = 1;
    m.at(0, 1) = p.a;
    m.at(1, 1) = p.h;
    return m;
}

} // namespace

// alpha(v) = (eps(v), eps(X v)); the closed form of the counit-and-handle pair.
LinMap alpha_C(const Params& p) {
    LinMap a(2, 2);
    LinMap e = eps_C(p);
    LinMap ex = e * mul_by_x(p);
    a.at(0, 0) = e.at(0, 0);
    a.at(0, 1) = e.at(0, 1);
    a.at(1, 0) = ex.at(0, 0);
    a.at(1, 1) = ex.at(0, 1);
    return a;
}

// beta(1,0) = X - h, beta(0,1) = 1.
LinMap beta_C(const Params& p) {
    LinMap b(2, 2);
    b.at(0, 0) = -p.h;
    b.at(1, 0) = 1;
    b.at(0, 1) = 1;
    return b;
}

LinMap alpha_W(const Params& p) {
    LinMap a(2, 2);
    LinMap e = eps_W(p);
    LinMap ex = e * mul_by_x(p);
    a.at(0, 0) = e.at(0, 0);
    a.at(0, 1) = e.at(0, 1);
    a.at(1, 0) = ex.at(0, 0);
    a.at(1, 1) = ex.at(0, 1);
    return a;
}

// The i-scaled C-side components: beta(1,0) = i(X - h), beta(0,1) = i.
LinMap beta_W(const Params& p) { return beta_C(p).scaled(kI); }

bool CheckReport::all_passed() const {
    for (const auto& [name, ok] : results)
        if (!ok) return false;
    return true;
}

std::vector<std::string> CheckReport::failures() const {
    std::vector<std::string> out;
    for (const auto& [name, ok] : results)
        if (!ok) out.push_back(name);
    return out;
}

namespace {

void frobenius_axioms(CheckReport& rep, const std::string& tag, const LinMap& m, const LinMap& u,
                      const LinMap& d, const LinMap& e) {
    LinMap id = LinMap::identity(2);
    LinMap tau = flip2();
    rep.results.emplace_back(tag + ": m commutative", m * tau == m);
    rep.results.emplace_back(tag + ": m associative", m * tensor(m, id) == m * tensor(id, m));
    rep.results.emplace_back(tag + ": unit", m * tensor(u, id) == id && m * tensor(id, u) == id);
    rep.results.emplace_back(tag + ": Delta coassociative",
                             tensor(d, id) * d == tensor(id, d) * d);
    rep.results.emplace_back(tag + ": counit", tensor(e, id) * d == id && tensor(id, e) * d == id);
    rep.results.emplace_back(tag + ": Delta cocommutative", tau * d == d);
    LinMap frob = d * m;
    rep.results.emplace_back(tag + ": Frobenius condition",
                             tensor(m, id) * tensor(id, d) == frob &&
                                 tensor(id, m) * tensor(d, id) == frob);
}

void algebra_hom(CheckReport& rep, const std::string& tag, const LinMap& z, const LinMap& mc,
                 const LinMap& uc, const LinMap& mw, const LinMap& uw) {
    rep.results.emplace_back(tag + " algebra hom (mult)", z * mc == mw * tensor(z, z));
    rep.results.emplace_back(tag + " algebra hom (unit)", z * uc == uw);
}

void coalgebra_hom(CheckReport& rep, const std::string& tag, const LinMap& zs, const LinMap& dw,
                   const LinMap& ew, const LinMap& dc, const LinMap& ec) {
    rep.results.emplace_back(tag + " coalgebra hom (comult)", dc * zs == tensor(zs, zs) * dw);
    rep.results.emplace_back(tag + " coalgebra hom (counit)", ec * zs == ew);
}

} // namespace

CheckReport check_axioms(const Params& p) {
    CheckReport rep;
    LinMap id = LinMap::identity(2);
    LinMap tau = flip2();

    LinMap mc = m_C(p), dc = delta_C(p), uc = iota_C(p), ec = eps_C(p);
    LinMap mw = m_W(p), dw = delta_W(p), uw = iota_W(p), ew = eps_W(p);
    LinMap Z1 = z1(p), Z1s = z1s(p), Z2 = z2(p), Z2s = z2s(p);

    frobenius_axioms(rep, "A_C", mc, uc, dc, ec);
    frobenius_axioms(rep, "A_W", mw, uw, dw, ew);

    algebra_hom(rep, "z1", Z1, mc, uc, mw, uw);
    algebra_hom(rep, "z2", Z2, mc, uc, mw, uw);
    coalgebra_hom(rep, "z1*", Z1s, dw, ew, dc, ec);
    coalgebra_hom(rep, "z2*", Z2s, dw, ew, dc, ec);

    rep.results.emplace_back("duality k=1",
                             ec * mc * tensor(id, Z1s) == ew * mw * tensor(Z1, id));
    rep.results.emplace_back("duality k=2",
                             ec * mc * tensor(id, Z2s) == ew * mw * tensor(Z2, id));

    rep.results.emplace_back("(i z1*) o z1 = id_C", Z1s.scaled(kI) * Z1 == id);
    rep.results.emplace_back("z1 o (i z1*) = id_W", Z1 * Z1s.scaled(kI) == id);
    rep.results.emplace_back("(-i z2*) o z2 = id_C", Z2s.scaled(-kI) * Z2 == id);
    rep.results.emplace_back("z2 o (-i z2*) = id_W", Z2 * Z2s.scaled(-kI) == id);

    rep.results.emplace_back("centrality k=1", mw * tensor(id, Z1) == mw * tau * tensor(id, Z1));
    rep.results.emplace_back("centrality k=2", mw * tensor(id, Z2) == mw * tau * tensor(id, Z2));

    // In this quotient the genus-one identity carries the extra minus sign.
    LinMap rhs = mw * tau * dw;
    rep.results.emplace_back("genus-one k=1 (signed)", -(Z1 * mc * dc * Z1s) == rhs);
    rep.results.emplace_back("genus-one k=2 (signed)", -(Z2 * mc * dc * Z2s) == rhs);

    rep.results.emplace_back("twist eps_W(x) = eps_C(-i x)", ew == ec.scaled(-kI));
    rep.results.emplace_back("twist Delta_W(x) = Delta_C(i x)", dw == dc.scaled(kI));

    LinMap F = f_map(p), G = g_map(p);
    rep.results.emplace_back("g o f = id", G * F == id);
    rep.results.emplace_back("f o g = id", F * G == id);

    return rep;
}

CheckReport check_local_relations(const Params& p) {
    CheckReport rep;
    LinMap mc = m_C(p), dc = delta_C(p), uc = iota_C(p), ec = eps_C(p);
    LinMap mw = m_W(p), dw = delta_W(p), uw = iota_W(p), ew = eps_W(p);
    LinMap F = f_map(p);
    LinMap handle = mc * dc; // genus-adding tube on the circle

    auto scalar = [](const GaussianRational& v) {
        LinMap s(1, 1);
        s.at(0, 0) = v;
        return s;
    };

    rep.results.emplace_back("S: sphere = 0", (ec * uc).is_zero());
    rep.results.emplace_back("T: torus = 2", ec * handle * uc == scalar(GaussianRational(2)));
    rep.results.emplace_back("UFO genus 0 = 0", (ec * F * uc).is_zero());
    rep.results.emplace_back("UFO genus 1 upper = -2i",
                             ec * F * handle * uc == scalar(-(GaussianRational(2) * kI)));
    rep.results.emplace_back("UFO genus 1 lower = 2i",
                             ec * g_map(p) * handle * uc == scalar(GaussianRational(2) * kI));
    rep.results.emplace_back("UFO genus 2 = 0", (ec * F * handle * handle * uc).is_zero());

    GaussianRational g2 = p.h * p.h + GaussianRational(4) * p.a;
    rep.results.emplace_back("G2: double handle = (h^2+4a)", handle * handle * uc == uc.scaled(g2));

    LinMap sf = (uc * (ec * handle)).scaled(kHalf) + ((handle * uc) * ec).scaled(kHalf);
    rep.results.emplace_back("SF: surgery formula = id_C", sf == LinMap::identity(2));

    GaussianRational ihalf = kI * kHalf;
    LinMap cn = (uw * (ec * handle * z1s(p))).scaled(ihalf) + ((z1(p) * handle * uc) * ew).scaled(ihalf);
    rep.results.emplace_back("CN: cutting neck = id_W", cn == LinMap::identity(2));

    return rep;
}

} // namespace twinfoam
