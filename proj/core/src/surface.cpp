#include "foldcalc/surface.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "foldcalc/error.hpp"

namespace foldcalc::surface {

namespace {

// The intersection form applied to v: identity on N_k, symplectic swap within
// each (a_i, b_i) pair on Σ_g.
BitVec form_times(const SurfaceModel& s, const BitVec& v) {
  if (!s.orientable) return v;
  BitVec out(v.size(), 0);
  for (std::size_t i = 0; i + 1 < v.size(); i += 2) {
    out[i] = v[i + 1];
    out[i + 1] = v[i];
  }
  return out;
}

int dot(const BitVec& u, const BitVec& v) {
  int acc = 0;
  for (std::size_t i = 0; i < u.size(); ++i) acc ^= (u[i] & v[i]);
  return acc;
}

BitVec add(BitVec u, const BitVec& v) {
  for (std::size_t i = 0; i < u.size(); ++i) u[i] ^= v[i];
  return u;
}

bool is_zero(const BitVec& v) {
  return std::all_of(v.begin(), v.end(), [](std::uint8_t b) { return b == 0; });
}

// Greedy independent-set builder: appends candidate to basis when it enlarges
// the span. Maintains a row-echelon copy for the rank test.
struct SpanBuilder {
  std::vector<BitVec> echelon;

  bool try_add(const BitVec& v) {
    BitVec r = v;
    for (const BitVec& e : echelon) {
      const std::size_t lead =
          static_cast<std::size_t>(std::find(e.begin(), e.end(), 1) - e.begin());
      if (lead < r.size() && r[lead]) r = add(std::move(r), e);
    }
    if (is_zero(r)) return false;
    echelon.push_back(std::move(r));
    // Keep echelon sorted by leading index for deterministic reduction.
    std::sort(echelon.begin(), echelon.end(), [](const BitVec& a, const BitVec& b) {
      return std::find(a.begin(), a.end(), 1) - a.begin() <
             std::find(b.begin(), b.end(), 1) - b.begin();
    });
    return true;
  }
};

// Inverse of a square matrix over the two-element field (columns are the
// given basis vectors). Precondition: invertible.
Z2LinearMap invert(const Z2LinearMap& m) {
  const int n = m.rows;
  Z2LinearMap a = m;
  Z2LinearMap inv = Z2LinearMap::identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if (a.at(r, col)) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) fail("InvalidData", "singular matrix passed to invert");
    for (int j = 0; j < n; ++j) {
      std::swap(a.at(pivot, j), a.at(col, j));
      std::swap(inv.at(pivot, j), inv.at(col, j));
    }
    for (int r = 0; r < n; ++r) {
      if (r != col && a.at(r, col)) {
        for (int j = 0; j < n; ++j) {
          a.at(r, j) ^= a.at(col, j);
          inv.at(r, j) ^= inv.at(col, j);
        }
      }
    }
  }
  return inv;
}

}  // namespace

void SurfaceModel::check() const {
  if (genus < 0) fail("InvalidData", "surface genus must be nonnegative");
  if (!orientable && genus < 1) {
    fail("InvalidData", "a nonorientable surface needs crosscap number >= 1");
  }
}

void CurveWord::check() const {
  surface.check();
  if (word.empty()) fail("InvalidData", "curve word must be nonempty");
  if (algebra::cyclic_reduce(word) != word) {
    fail("InvalidData", "curve word must be cyclically reduced");
  }
  for (const algebra::Letter& l : word) {
    if (l.gen < 0 || l.gen >= surface.z2_betti()) {
      fail("InvalidData", "curve word letter outside the surface alphabet");
    }
  }
}

void Z2Class::check() const {
  surface.check();
  if (static_cast<int>(vector.size()) != surface.z2_betti()) {
    fail("InvalidData", "class vector length must match the surface Betti number");
  }
  for (std::uint8_t b : vector) {
    if (b > 1) fail("InvalidData", "class vector entries must be bits");
  }
}

Z2LinearMap Z2LinearMap::zero(int r, int c) {
  Z2LinearMap m;
  m.rows = r;
  m.cols = c;
  m.entries.assign(static_cast<std::size_t>(r) * static_cast<std::size_t>(c), 0);
  return m;
}

Z2LinearMap Z2LinearMap::identity(int n) {
  Z2LinearMap m = zero(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

BitVec Z2LinearMap::apply(const BitVec& v) const {
  if (static_cast<int>(v.size()) != cols) {
    fail("InvalidData", "vector length does not match the map's domain");
  }
  BitVec out(static_cast<std::size_t>(rows), 0);
  for (int i = 0; i < rows; ++i) {
    std::uint8_t acc = 0;
    for (int j = 0; j < cols; ++j) acc ^= (at(i, j) & v[static_cast<std::size_t>(j)]);
    out[static_cast<std::size_t>(i)] = acc;
  }
  return out;
}

Z2LinearMap Z2LinearMap::compose(const Z2LinearMap& inner) const {
  if (cols != inner.rows) fail("InvalidData", "composition dimension mismatch");
  Z2LinearMap out = zero(rows, inner.cols);
  for (int i = 0; i < rows; ++i) {
    for (int k = 0; k < cols; ++k) {
      if (!at(i, k)) continue;
      for (int j = 0; j < inner.cols; ++j) out.at(i, j) ^= inner.at(k, j);
    }
  }
  return out;
}

bool Z2LinearMap::is_identity() const {
  if (rows != cols) return false;
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      if (at(i, j) != (i == j ? 1 : 0)) return false;
    }
  }
  return true;
}

Z2Class z2_class(const CurveWord& c) {
  c.check();
  Z2Class out{c.surface, BitVec(static_cast<std::size_t>(c.surface.z2_betti()), 0)};
  for (const algebra::Letter& l : c.word) {
    out.vector[static_cast<std::size_t>(l.gen)] ^= 1;
  }
  return out;
}

int intersection_mod2(const Z2Class& x, const Z2Class& y) {
  x.check();
  y.check();
  if (x.surface != y.surface) {
    fail("SurfaceMismatch", "intersection pairing needs classes on one surface");
  }
  return dot(x.vector, form_times(x.surface, y.vector));
}

int self_intersection_mod2(const Z2Class& x) { return intersection_mod2(x, x); }

bool is_two_sided(const CurveWord& c) {
  return self_intersection_mod2(z2_class(c)) == 0;
}

bool is_essential_z2(const CurveWord& c) { return !is_zero(z2_class(c).vector); }

Z2LinearMap dehn_twist_z2(const Z2Class& c) {
  c.check();
  if (self_intersection_mod2(c) != 0) {
    fail("OneSidedCurve", "Dehn twists require a two-sided curve class");
  }
  const int n = c.surface.z2_betti();
  const BitVec qc = form_times(c.surface, c.vector);
  Z2LinearMap t = Z2LinearMap::identity(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      t.at(i, j) ^= (c.vector[static_cast<std::size_t>(i)] &
                     qc[static_cast<std::size_t>(j)]);
    }
  }
  return t;
}

CutCapForget cut_cap_forget_z2(const Z2Class& c) {
  c.check();
  if (is_zero(c.vector)) {
    fail("NullClass", "cut-cap-forget needs a homologically nonzero curve");
  }
  if (self_intersection_mod2(c) != 0) {
    fail("OneSidedCurve", "cut-cap-forget needs a two-sided curve class");
  }
  const int n = c.surface.z2_betti();
  const BitVec q = form_times(c.surface, c.vector);  // perpendicular = ker(q . v)

  // Kernel basis of the functional v -> q.v, seeded with c itself so the
  // quotient basis is the rest.
  std::size_t pivot = static_cast<std::size_t>(
      std::find(q.begin(), q.end(), 1) - q.begin());
  SpanBuilder span;
  std::vector<BitVec> basis;
  span.try_add(c.vector);
  basis.push_back(c.vector);
  for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j) {
    if (j == pivot) continue;
    BitVec v(static_cast<std::size_t>(n), 0);
    v[j] = 1;
    if (q[j]) v[pivot] = 1;
    if (span.try_add(v)) basis.push_back(std::move(v));
  }
  // basis = (c, u_1, ..., u_{n-2}); reorder with c last.
  std::rotate(basis.begin(), basis.begin() + 1, basis.end());

  // Extend to an ambient basis with one vector outside the perpendicular.
  BitVec outside(static_cast<std::size_t>(n), 0);
  outside[pivot] = 1;

  Z2LinearMap change = Z2LinearMap::zero(n, n);
  for (int j = 0; j < n - 1; ++j) {
    for (int i = 0; i < n; ++i) {
      change.at(i, j) = basis[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    }
  }
  for (int i = 0; i < n; ++i) change.at(i, n - 1) = outside[static_cast<std::size_t>(i)];
  const Z2LinearMap coords = invert(change);

  CutCapForget out;
  out.subspace_basis = std::move(basis);
  out.quotient_dim = n - 2;
  out.projection = Z2LinearMap::zero(n - 2, n);
  for (int i = 0; i < n - 2; ++i) {
    for (int j = 0; j < n; ++j) out.projection.at(i, j) = coords.at(i, j);
  }
  return out;
}

Z2LinearMap induced_quotient_action(const std::vector<Z2Class>& twists,
                                    const Z2Class& c) {
  c.check();
  const int n = c.surface.z2_betti();
  Z2LinearMap composite = Z2LinearMap::identity(n);
  for (const Z2Class& t : twists) {
    t.check();
    if (t.surface != c.surface) {
      fail("SurfaceMismatch", "twist classes must live on the cut surface");
    }
    composite = dehn_twist_z2(t).compose(composite);
  }

  const CutCapForget cut = cut_cap_forget_z2(c);
  if (composite.apply(c.vector) != c.vector) {
    fail("DoesNotStabilize", "composite twist does not fix the cut curve class");
  }
  const BitVec q = form_times(c.surface, c.vector);
  for (const BitVec& u : cut.subspace_basis) {
    if (dot(q, composite.apply(u)) != 0) {
      fail("DoesNotStabilize",
           "composite twist does not preserve the cut curve's perpendicular");
    }
  }

  Z2LinearMap action = Z2LinearMap::zero(cut.quotient_dim, cut.quotient_dim);
  for (int j = 0; j < cut.quotient_dim; ++j) {
    const BitVec image =
        cut.projection.apply(composite.apply(cut.subspace_basis[static_cast<std::size_t>(j)]));
    for (int i = 0; i < cut.quotient_dim; ++i) {
      action.at(i, j) = image[static_cast<std::size_t>(i)];
    }
  }
  return action;
}

}  // namespace foldcalc::surface
