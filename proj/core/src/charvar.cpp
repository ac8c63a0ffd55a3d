#include "skeinlab/charvar.hpp"

#include <cmath>
#include <numeric>

#include <nlohmann/json.hpp>

namespace skeinlab {

double SL2Rep::det_defect() const {
  double m = 0.0;
  for (const auto& M : matrices) m = std::max(m, std::abs(M.det() - Complex(1.0)));
  return m;
}

SL2Rep SL2Rep::from_json(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what());
  }
  const nlohmann::json* mats = &j;
  if (j.is_object() && j.contains("matrices")) mats = &j["matrices"];
  if (!mats->is_array()) throw SchemaError("SL2Rep: expected an array of matrices");
  SL2Rep r;
  for (const auto& m : *mats) {
    if (!m.is_array() || m.size() != 4)
      throw SchemaError("SL2Rep: each matrix is a quadruple of [re,im] pairs");
    Complex e[4];
    for (int i = 0; i < 4; ++i) {
      const auto& p = m[i];
      if (!p.is_array() || p.size() != 2)
        throw SchemaError("SL2Rep: entries must be [re,im] pairs");
      e[i] = Complex(p[0].get<double>(), p[1].get<double>());
    }
    r.matrices.push_back(Mat2{e[0], e[1], e[2], e[3]});
  }
  return r;
}

std::string SL2Rep::to_json() const {
  nlohmann::json mats = nlohmann::json::array();
  for (const auto& M : matrices) {
    mats.push_back({{M.a.real(), M.a.imag()},
                    {M.b.real(), M.b.imag()},
                    {M.c.real(), M.c.imag()},
                    {M.d.real(), M.d.imag()}});
  }
  return nlohmann::json{{"matrices", mats}}.dump();
}

GroupWord GroupWord::parse(const std::string& text) {
  GroupWord w;
  for (char ch : text) {
    if (ch == ' ' || ch == '\t') continue;
    if (ch >= 'a' && ch <= 'z')
      w.letters.emplace_back(ch - 'a', 1);
    else if (ch >= 'A' && ch <= 'Z')
      w.letters.emplace_back(ch - 'A', -1);
    else
      throw ValidationError(std::string("GroupWord: unexpected character '") + ch + "'");
  }
  return w;
}

GroupWord GroupWord::inverse() const {
  GroupWord w;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it)
    w.letters.emplace_back(it->first, -it->second);
  return w;
}

int Z2Cocycle::evaluate(const GroupWord& w) const {
  int total = 0;
  for (const auto& [gen, exp] : w.letters) {
    if (gen < 0 || gen >= static_cast<int>(signs.size()))
      throw std::out_of_range("Z2Cocycle: generator index out of range");
    total += signs[static_cast<std::size_t>(gen)];
  }
  return total % 2;
}

Mat2 word_matrix(const GroupWord& w, const SL2Rep& r) {
  Mat2 M = Mat2::identity();
  for (const auto& [gen, exp] : w.letters) {
    if (gen < 0 || gen >= static_cast<int>(r.rank()))
      throw std::out_of_range("word_matrix: generator index out of range");
    const Mat2& G = r.matrices[static_cast<std::size_t>(gen)];
    M = M * (exp >= 0 ? G : G.inverse_sl2());
  }
  return M;
}

Complex trace_word(const GroupWord& w, const SL2Rep& r) {
  return word_matrix(w, r).trace();
}

double trace_identity_check(const Mat2& M, const Mat2& N) {
  if (std::abs(N.det()) < 1e-14)
    throw SingularMatrix("trace_identity_check: N is numerically singular");
  const Complex lhs = (M * N).trace() + (M * N.inverse_sl2()).trace();
  const Complex rhs = M.trace() * N.trace();
  return std::abs(lhs - rhs);
}

Complex bullock_value(const std::vector<GroupWord>& components, const SL2Rep& r) {
  Complex prod{1.0, 0.0};
  for (const auto& w : components) prod *= trace_word(w, r);
  const double sign = (components.size() % 2 == 0) ? 1.0 : -1.0;
  return sign * prod;
}

SL2Rep twist_rep(const SL2Rep& r, const Z2Cocycle& alpha) {
  if (alpha.signs.size() != r.rank())
    throw LengthMismatch("twist_rep: cocycle length must equal the rank");
  SL2Rep out = r;
  for (std::size_t i = 0; i < out.matrices.size(); ++i)
    if (alpha.signs[i] % 2 != 0) out.matrices[i] = -out.matrices[i];
  return out;
}

namespace {

// Stern-Brocot descent between Farey neighbors; seeds are the traces of
// (1,0), (0,1) and (1,1) in the working coordinates.
Complex farey_descend(long p, long q, Complex x, Complex y, Complex z) {
  long pl = 1, ql = 0, pr = 0, qr = 1, pm = 1, qm = 1;
  Complex tl = x, tr = y, tm = z;
  while (!(pm == p && qm == q)) {
    // compare the target slope with the mediant slope
    const long cross = q * pm - qm * p;
    if (cross < 0) {
      // target lies between L and M
      pr = pm; qr = qm;
      const Complex told_r = tr;
      tr = tm;
      pm = pl + pr; qm = ql + qr;
      tm = tl * tr - told_r;
    } else {
      pl = pm; ql = qm;
      const Complex told_l = tl;
      tl = tm;
      pm = pl + pr; qm = ql + qr;
      tm = tl * tr - told_l;
    }
  }
  return tm;
}

}  // namespace

Complex fricke_trace(long p, long q, const SL2Rep& r) {
  if (r.rank() != 2)
    throw ValidationError("fricke_trace: representation must have rank 2");
  if (std::gcd(std::labs(p), std::labs(q)) != 1)
    throw NotCoprime("fricke_trace: gcd(p, q) must be 1");
  // (p,q) and (-p,-q) are the same unoriented curve
  if (p < 0 || (p == 0 && q < 0)) {
    p = -p;
    q = -q;
  }
  const Complex x = r.matrices[0].trace();
  const Complex y = r.matrices[1].trace();
  const Complex z = (r.matrices[0] * r.matrices[1]).trace();
  if (q == 0) return x;   // (1,0)
  if (p == 0) return y;   // (0,1)
  if (q > 0) return farey_descend(p, q, x, y, z);
  // reflect b -> b^{-1}: the (p,q) curve becomes (p,-q) with seed
  // Tr(a b^{-1}) = xy - z
  return farey_descend(p, -q, x, y, x * y - z);
}

GroupWord pq_word(long p, long q) {
  if (std::gcd(std::labs(p), std::labs(q)) != 1)
    throw NotCoprime("pq_word: gcd(p, q) must be 1");
  if (p < 0 || (p == 0 && q < 0)) {
    p = -p;
    q = -q;
  }
  const int a_exp = 1;
  const int b_exp = q >= 0 ? 1 : -1;
  const long pa = std::labs(p), qa = std::labs(q);
  GroupWord w;
  if (qa == 0) {
    w.letters.emplace_back(0, a_exp);
    return w;
  }
  if (pa == 0) {
    w.letters.emplace_back(1, b_exp);
    return w;
  }
  // lower Christoffel word of slope qa/pa over the letters a, b
  const long n = pa + qa;
  for (long i = 1; i <= n; ++i) {
    const long prev = ((i - 1) * qa) / n;
    const long cur = (i * qa) / n;
    if (cur == prev)
      w.letters.emplace_back(0, a_exp);
    else
      w.letters.emplace_back(1, b_exp);
  }
  return w;
}

std::vector<GroupWord> reduced_words_rank2(int max_len) {
  std::vector<GroupWord> out;
  out.push_back(GroupWord{});
  std::vector<GroupWord> frontier = {GroupWord{}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<GroupWord> next;
    for (const auto& w : frontier) {
      for (int gen = 0; gen < 2; ++gen) {
        for (int exp : {1, -1}) {
          if (!w.letters.empty()) {
            const auto& last = w.letters.back();
            if (last.first == gen && last.second == -exp) continue;
          }
          GroupWord ext = w;
          ext.letters.emplace_back(gen, exp);
          next.push_back(std::move(ext));
        }
      }
    }
    for (const auto& w : next) out.push_back(w);
    frontier = std::move(next);
  }
  return out;
}

}  // namespace skeinlab
