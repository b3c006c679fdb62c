#include "braidscope/homology.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include <boost/multiprecision/cpp_int.hpp>

namespace braidscope {

using BigInt = boost::multiprecision::cpp_int;

ChainComplex chain_complex(const CubeComplex& x) {
  if (!x.is_full()) throw PreconditionError("homology needs a complex built to dimension n");
  const auto& g = x.graph();
  ChainComplex c;
  for (int d = 0; d <= x.top_dimension(); ++d) c.dimensions.push_back(x.count(d));
  c.boundary.resize(x.top_dimension() + 1);
  c.boundary[0].rows = 0;
  c.boundary[0].columns.assign(x.count(0), {});
  for (int d = 1; d <= x.top_dimension(); ++d) {
    auto& m = c.boundary[d];
    m.rows = static_cast<int>(x.count(d - 1));
    m.columns.reserve(x.count(d));
    for (const auto& cube : x.cubes(d)) {
      SparseColumn col;
      for (int i = 0; i < d; ++i) {
        const std::int64_t sign = i % 2 == 0 ? 1 : -1;
        const auto upper = x.find(facet(g, cube, i, true));
        const auto lower = x.find(facet(g, cube, i, false));
        if (!upper || !lower) throw PreconditionError("complex is missing a facet");
        col.emplace_back(*upper, sign);
        col.emplace_back(*lower, -sign);
      }
      std::sort(col.begin(), col.end());
      m.columns.push_back(std::move(col));
    }
  }
  return c;
}

bool ChainComplex::boundary_squared_vanishes() const {
  for (std::size_t d = 2; d < boundary.size(); ++d) {
    const auto& outer = boundary[d - 1];
    for (const auto& col : boundary[d].columns) {
      std::unordered_map<int, std::int64_t> image;
      for (const auto& [mid, a] : col)
        for (const auto& [row, b] : outer.columns[mid]) image[row] += a * b;
      for (const auto& [row, value] : image)
        if (value != 0) return false;
    }
  }
  return true;
}

namespace {

struct Overflow {};

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}
std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
  return r;
}
std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
  return r;
}
BigInt checked_mul(const BigInt& a, const BigInt& b) { return a * b; }
BigInt checked_sub(const BigInt& a, const BigInt& b) { return a - b; }
BigInt checked_add(const BigInt& a, const BigInt& b) { return a + b; }

template <class T>
T magnitude(const T& v) {
  return v < 0 ? T(-v) : v;
}

/// Elimination over T. Returns the rank and the invariant factors > 1.
template <class T>
std::pair<std::size_t, std::vector<T>> eliminate(const SparseMatrix& input) {
  using Column = std::vector<std::pair<int, T>>;
  std::vector<Column> cols(input.columns.size());
  std::vector<std::unordered_set<int>> row_cols(input.rows);
  for (std::size_t c = 0; c < input.columns.size(); ++c) {
    for (const auto& [r, v] : input.columns[c]) {
      if (v == 0) continue;
      cols[c].emplace_back(r, T(v));
      row_cols[r].insert(static_cast<int>(c));
    }
  }

  std::size_t rank = 0;
  std::vector<bool> live(cols.size(), true);
  // Sparse phase: unit pivots only, which never change the invariant factors.
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (!live[c]) continue;
      if (cols[c].empty()) {
        live[c] = false;
        continue;
      }
      int pivot_row = -1;
      T pivot = 0;
      std::size_t best = SIZE_MAX;
      for (const auto& [r, v] : cols[c]) {
        if ((v == 1 || v == -1) && row_cols[r].size() < best) {
          best = row_cols[r].size();
          pivot_row = r;
          pivot = v;
        }
      }
      if (pivot_row < 0) continue;
      const std::vector<int> others(row_cols[pivot_row].begin(), row_cols[pivot_row].end());
      for (int o : others) {
        if (o == static_cast<int>(c)) continue;
        auto& target = cols[o];
        auto at = std::lower_bound(target.begin(), target.end(), pivot_row,
                                   [](const auto& entry, int row) { return entry.first < row; });
        const T factor = checked_mul(at->second, pivot);
        // target -= factor * cols[c]
        Column merged;
        merged.reserve(target.size() + cols[c].size());
        auto i = target.begin();
        auto j = cols[c].begin();
        while (i != target.end() || j != cols[c].end()) {
          if (j == cols[c].end() || (i != target.end() && i->first < j->first)) {
            merged.push_back(*i++);
          } else if (i == target.end() || j->first < i->first) {
            merged.emplace_back(j->first, checked_mul(T(-factor), j->second));
            row_cols[j->first].insert(o);
            ++j;
          } else {
            T v = checked_sub(i->second, checked_mul(factor, j->second));
            if (v != 0) {
              merged.emplace_back(i->first, std::move(v));
            } else {
              row_cols[i->first].erase(o);
            }
            ++i;
            ++j;
          }
        }
        target = std::move(merged);
      }
      for (const auto& [r, v] : cols[c]) row_cols[r].erase(static_cast<int>(c));
      cols[c].clear();
      live[c] = false;
      ++rank;
      progress = true;
    }
  }

  // Dense phase on what is left.
  std::vector<int> rows_left;
  for (int r = 0; r < input.rows; ++r)
    if (!row_cols[r].empty()) rows_left.push_back(r);
  std::vector<std::size_t> cols_left;
  for (std::size_t c = 0; c < cols.size(); ++c)
    if (live[c] && !cols[c].empty()) cols_left.push_back(c);
  std::unordered_map<int, int> row_pos;
  for (std::size_t i = 0; i < rows_left.size(); ++i) row_pos[rows_left[i]] = static_cast<int>(i);
  const std::size_t m = rows_left.size();
  const std::size_t n = cols_left.size();
  std::vector<std::vector<T>> a(m, std::vector<T>(n, T(0)));
  for (std::size_t j = 0; j < n; ++j)
    for (const auto& [r, v] : cols[cols_left[j]]) a[row_pos[r]][j] = v;

  std::vector<T> diagonal;
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    auto place_min = [&]() {
      std::size_t pr = m, pc = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (a[i][j] != 0 && (pr == m || magnitude(a[i][j]) < magnitude(a[pr][pc]))) {
            pr = i;
            pc = j;
          }
      if (pr == m) return false;
      std::swap(a[t], a[pr]);
      for (auto& row : a) std::swap(row[t], row[pc]);
      return true;
    };
    if (!place_min()) break;
    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a[i][t] == 0) continue;
        const T q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < n; ++j) a[i][j] = checked_sub(a[i][j], checked_mul(q, a[t][j]));
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a[t][j] == 0) continue;
        const T q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < m; ++i) a[i][j] = checked_sub(a[i][j], checked_mul(q, a[i][t]));
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) {
        place_min();
        continue;
      }
      // Divisibility: fold an offending row into row t and go again.
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i) {
        for (std::size_t j = t + 1; j < n; ++j) {
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t k = t; k < n; ++k) a[t][k] = checked_add(a[t][k], a[i][k]);
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    diagonal.push_back(magnitude(a[t][t]));
  }

  rank += diagonal.size();
  // gcd/lcm pass so each factor divides the next.
  for (std::size_t i = 0; i < diagonal.size(); ++i) {
    for (std::size_t j = i + 1; j < diagonal.size(); ++j) {
      T g = diagonal[i], h = diagonal[j];
      while (h != 0) {
        T r = g % h;
        g = h;
        h = r;
      }
      const T l = checked_mul(T(diagonal[i] / g), diagonal[j]);
      diagonal[i] = g;
      diagonal[j] = l;
    }
  }
  std::vector<T> torsion;
  for (const auto& v : diagonal)
    if (v > 1) torsion.push_back(v);
  return {rank, torsion};
}

}  // namespace

SmithForm smith_form(const SparseMatrix& m, const Limits& limits) {
  if (static_cast<std::uint64_t>(m.cols()) > limits.max_matrix_columns)
    throw ResourceLimit("boundary matrix has " + std::to_string(m.cols()) + " columns, above the cap of " +
                        std::to_string(limits.max_matrix_columns));
  SmithForm out;
  try {
    auto [rank, torsion] = eliminate<std::int64_t>(m);
    out.rank = rank;
    out.torsion = std::move(torsion);
  } catch (const Overflow&) {
    auto [rank, torsion] = eliminate<BigInt>(m);
    out.rank = rank;
    for (const auto& t : torsion) {
      if (t > std::numeric_limits<std::int64_t>::max())
        throw ResourceLimit("torsion coefficient does not fit in 64 bits");
      out.torsion.push_back(static_cast<std::int64_t>(t));
    }
  }
  return out;
}

HomologySummary homology(const ChainComplex& c, const Limits& limits) {
  const std::size_t top = c.dimensions.size();
  std::vector<SmithForm> forms(top + 1);
  for (std::size_t d = 1; d < top; ++d) forms[d] = smith_form(c.boundary[d], limits);
  HomologySummary out;
  for (std::size_t d = 0; d < top; ++d) {
    HomologyGroup h;
    h.free_rank = c.dimensions[d] - forms[d].rank - forms[d + 1].rank;
    h.torsion = forms[d + 1].torsion;
    out.groups.push_back(std::move(h));
  }
  return out;
}

std::int64_t HomologySummary::euler_characteristic() const {
  std::int64_t chi = 0;
  for (std::size_t d = 0; d < groups.size(); ++d)
    chi += (d % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(groups[d].free_rank);
  return chi;
}

bool HomologySummary::torsion_free() const {
  return std::all_of(groups.begin(), groups.end(), [](const HomologyGroup& h) { return h.torsion.empty(); });
}

std::string to_string(const HomologyGroup& h) {
  std::string out;
  if (h.free_rank > 0) out = h.free_rank == 1 ? "Z" : "Z^" + std::to_string(h.free_rank);
  for (auto t : h.torsion) out += (out.empty() ? "" : " + ") + std::string("Z/") + std::to_string(t);
  return out.empty() ? "0" : out;
}

}  // namespace braidscope
