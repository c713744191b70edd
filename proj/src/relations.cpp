#include "bianchi/relations.hpp"

namespace bianchi {

namespace {

using GP = GenPower;
constexpr auto S = Generator::S;
constexpr auto T = Generator::T;
constexpr auto Tw = Generator::Tw;
constexpr auto U = Generator::U;
constexpr auto L = Generator::L;
constexpr auto E = Generator::E;

WordTerm term(std::vector<GP> factors) { return {Int(1), std::move(factors)}; }

std::vector<GroupWord> relation_words(int d_code) {
  switch (d_code) {
    case 1:
    case 3:
      return {
          {{term({}), term({{S, 1}})}},                                 // I + S
          {{term({}), WordTerm{Int(-1), {{L, 1}}}}},                    // I - L
          {{term({}), term({{U, 1}}), term({{U, 2}})}},                 // I + U + U^2
          {{term({}), term({{Tw, 1}, {S, 1}, {L, 1}}),
            term({{Tw, 1}, {S, 1}, {L, 1}, {Tw, 1}, {S, 1}, {L, 1}})}}, // I + TwSL + (TwSL)^2
      };
    case 2:
      return {
          {{term({}), term({{S, 1}})}},
          {{term({}), term({{U, 1}}), term({{U, 2}})}},
          {{term({}), term({{S, 1}, {Tw, 1}}), term({{Tw, 1}, {S, 1}}),
            term({{Tw, -1}, {S, 1}, {Tw, 1}, {S, 1}})}},
      };
    case 7:
      return {
          {{term({}), term({{S, 1}})}},
          {{term({}), term({{U, 1}}), term({{U, 2}})}},
          {{term({{T, 1}}), term({{S, 1}, {Tw, 1}}),
            term({{Tw, 1}, {S, 1}, {T, 1}}),
            term({{S, 1}, {Tw, -1}, {S, 1}, {Tw, 1}})}},
      };
    case 11:
      return {
          {{term({}), term({{S, 1}})}},
          {{term({}), term({{U, 1}}), term({{U, 2}})}},
          {{term({{T, 1}}), term({{S, 1}, {Tw, 1}}), term({{T, 1}, {E, 1}}),
            term({{S, 1}, {Tw, 1}, {E, -1}}),
            term({{Tw, 1}, {S, 1}, {T, 1}}),
            term({{S, 1}, {Tw, -1}, {S, 1}, {Tw, 1}})}},
      };
  }
  throw std::domain_error("unsupported field D=" + std::to_string(d_code));
}

}  // namespace

RelationSystem build_relations(int d_code, int k) {
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  std::vector<GroupWord> words = relation_words(d_code);
  const size_t dim = vkk_dim(k);
  KMatrix stacked(d_code, words.size() * dim, dim);
  for (size_t wi = 0; wi < words.size(); ++wi) {
    KMatrix block = word_slash_matrix(d_code, words[wi], k);
    for (size_t r = 0; r < dim; ++r)
      for (size_t c = 0; c < dim; ++c)
        stacked.at(wi * dim + r, c) = block.at(r, c);
  }
  return {d_code, k, std::move(words), std::move(stacked)};
}

Echelon rref(std::vector<std::vector<QuadElem>> rows, int d_code) {
  Echelon out;
  if (rows.empty()) return out;
  const size_t cols = rows[0].size();
  size_t head = 0;
  for (size_t col = 0; col < cols && head < rows.size(); ++col) {
    size_t piv = head;
    while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[head], rows[piv]);
    QuadElem inv = rows[head][col].inverse();
    for (size_t j = col; j < cols; ++j) rows[head][j] = rows[head][j] * inv;
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == head || rows[r][col].is_zero()) continue;
      QuadElem f = rows[r][col];
      for (size_t j = col; j < cols; ++j)
        rows[r][j] = rows[r][j] - f * rows[head][j];
    }
    out.pivots.push_back(col);
    ++head;
  }
  rows.resize(head, std::vector<QuadElem>());
  out.rows = std::move(rows);
  (void)d_code;
  return out;
}

std::vector<QuadElem> reduce_against(std::vector<QuadElem> v,
                                     const Echelon& ech) {
  for (size_t r = 0; r < ech.rows.size(); ++r) {
    const size_t p = ech.pivots[r];
    if (v[p].is_zero()) continue;
    QuadElem f = v[p];
    for (size_t j = p; j < v.size(); ++j) v[j] = v[j] - f * ech.rows[r][j];
  }
  return v;
}

bool in_rowspace(const std::vector<QuadElem>& v, const Echelon& ech) {
  for (const QuadElem& c : reduce_against(v, ech))
    if (!c.is_zero()) return false;
  return true;
}

SubspaceBasis kernel(const KMatrix& mat) {
  const int dc = mat.d_code();
  const size_t n = mat.cols();
  std::vector<std::vector<QuadElem>> rows;
  rows.reserve(mat.rows());
  for (size_t r = 0; r < mat.rows(); ++r) {
    std::vector<QuadElem> row;
    row.reserve(n);
    for (size_t c = 0; c < n; ++c) row.push_back(mat.at(r, c));
    rows.push_back(std::move(row));
  }
  Echelon ech = rref(std::move(rows), dc);

  SubspaceBasis out;
  out.ambient_dim = n;
  std::vector<bool> is_pivot(n, false);
  for (size_t p : ech.pivots) is_pivot[p] = true;
  for (size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<QuadElem> v(n, QuadElem::zero(dc));
    v[free] = QuadElem::one(dc);
    for (size_t r = 0; r < ech.rows.size(); ++r)
      v[ech.pivots[r]] = -ech.rows[r][free];
    out.basis.push_back(std::move(v));
  }
  out.basis = rref(std::move(out.basis), dc).rows;
  return out;
}

std::vector<QuadElem> coboundary_vector(int d_code, int k) {
  std::vector<QuadElem> v(vkk_dim(k), QuadElem::zero(d_code));
  if (k == 0) return v;  // X^0 Xbar^0 - Y^0 Ybar^0 = 0
  v.front() = QuadElem::one(d_code);
  v.back() = QuadElem(d_code, -1, 0);
  return v;
}

WkkBasis wkk_basis(int d_code, int k) {
  RelationSystem rs = build_relations(d_code, k);
  SubspaceBasis w = kernel(rs.stacked);

  std::vector<QuadElem> cb = coboundary_vector(d_code, k);
  Echelon wech = rref(w.basis, d_code);
  w.contains_coboundary = in_rowspace(cb, wech);

  WkkBasis out{std::move(w), {}};
  if (k == 0 || !out.w.contains_coboundary) {
    out.w_tilde = out.w.basis;
    return out;
  }
  // extend the coboundary to a basis of W; the complementary vectors
  // represent the quotient W~
  std::vector<std::vector<QuadElem>> ext{cb};
  Echelon acc = rref({cb}, d_code);
  for (const auto& v : out.w.basis) {
    if (in_rowspace(v, acc)) continue;
    out.w_tilde.push_back(v);
    ext.push_back(v);
    acc = rref(ext, d_code);
  }
  return out;
}

}  // namespace bianchi
