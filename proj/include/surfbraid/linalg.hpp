#ifndef SURFBRAID_LINALG_HPP_
#define SURFBRAID_LINALG_HPP_

// Exact sparse linear algebra: an incremental rational echelon form that can
// track how each stored row was built from the input rows, and integer
// elementary divisors of a sparse integer matrix.

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <unordered_map>
#include <utility>
#include <vector>

#include "arith.hpp"

namespace surfbraid {

  using SparseVec = std::map<int, Rational>;

  inline void axpy(SparseVec& y, Rational const& a, SparseVec const& x) {
    for (auto const& [k, v] : x) {
      auto& slot = y[k];
      slot += a * v;
      if (sgn(slot) == 0) {
        y.erase(k);
      }
    }
  }

  // Rows are kept in semi-echelon form: distinct leading columns, leading
  // coefficient 1.  With tracking on, each row carries the combination of
  // input row ids that produced it.
  class Echelon {
   public:
    explicit Echelon(bool track = false) : track_(track) {}

    // Returns true when the row is independent of the stored ones.
    bool add(SparseVec v, int id = -1) {
      SparseVec combo;
      if (track_) {
        combo[id] = 1;
      }
      reduce(v, combo, false);
      if (v.empty()) {
        return false;
      }
      int      lead = v.begin()->first;
      Rational inv  = 1 / v.begin()->second;
      for (auto& [k, x] : v) {
        x *= inv;
      }
      if (track_) {
        for (auto& [k, x] : combo) {
          x *= inv;
        }
      }
      pivot_.emplace(lead, rows_.size());
      rows_.push_back({std::move(v), std::move(combo)});
      return true;
    }

    [[nodiscard]] std::size_t rank() const {
      return rows_.size();
    }

    // Fully reduces v; on return `combo` holds c with v_in - sum c_id row_id
    // equal to the residual v_out.
    void reduce(SparseVec& v, SparseVec& combo, bool full = true) const {
      auto it = v.begin();
      while (it != v.end()) {
        int  col = it->first;
        auto p   = pivot_.find(col);
        if (p == pivot_.end()) {
          if (!full) {
            return;
          }
          ++it;
          continue;
        }
        Rational    f   = it->second;
        auto const& row = rows_[p->second];
        axpy(v, -f, row.vec);
        if (track_) {
          axpy(combo, -f, row.combo);
        }
        it = v.upper_bound(col);
      }
    }

    // True when v is in the row span; `coefficients` then expresses v as a
    // combination of the input row ids.
    bool contains(SparseVec v, SparseVec* coefficients = nullptr) const {
      SparseVec combo;
      reduce(v, combo, true);
      if (!v.empty()) {
        return false;
      }
      if (coefficients != nullptr) {
        coefficients->clear();
        for (auto const& [k, x] : combo) {
          (*coefficients)[k] = -x;
        }
      }
      return true;
    }

   private:
    struct Row {
      SparseVec vec;
      SparseVec combo;
    };
    bool                            track_;
    std::vector<Row>                rows_;
    std::unordered_map<int, size_t> pivot_;
  };

  using IntSparseRow = std::map<int, Integer>;

  namespace detail {
    // Smith form diagonal of a small dense matrix.
    inline std::vector<Integer> dense_smith(std::vector<std::vector<Integer>> a) {
      std::vector<Integer> diag;
      std::size_t const    m = a.size();
      std::size_t const    n = m == 0 ? 0 : a[0].size();
      std::size_t          t = 0;
      while (t < m && t < n) {
        // Smallest nonzero entry in the trailing block.
        std::size_t pi = m, pj = n;
        for (std::size_t i = t; i < m; ++i) {
          for (std::size_t j = t; j < n; ++j) {
            if (sgn(a[i][j]) != 0
                && (pi == m || abs(a[i][j]) < abs(a[pi][pj]))) {
              pi = i;
              pj = j;
            }
          }
        }
        if (pi == m) {
          break;
        }
        std::swap(a[t], a[pi]);
        for (auto& row : a) {
          std::swap(row[t], row[pj]);
        }
        bool clean = false;
        while (!clean) {
          clean = true;
          for (std::size_t i = t + 1; i < m; ++i) {
            if (sgn(a[i][t]) == 0) {
              continue;
            }
            Integer q = a[i][t] / a[t][t];
            for (std::size_t j = t; j < n; ++j) {
              a[i][j] -= q * a[t][j];
            }
            if (sgn(a[i][t]) != 0) {
              std::swap(a[t], a[i]);
              clean = false;
            }
          }
          for (std::size_t j = t + 1; j < n; ++j) {
            if (sgn(a[t][j]) == 0) {
              continue;
            }
            Integer q = a[t][j] / a[t][t];
            for (std::size_t i = t; i < m; ++i) {
              a[i][j] -= q * a[i][t];
            }
            if (sgn(a[t][j]) != 0) {
              for (auto& row : a) {
                std::swap(row[t], row[j]);
              }
              clean = false;
            }
          }
          if (clean) {
            // The pivot must divide the whole trailing block.
            for (std::size_t i = t + 1; i < m && clean; ++i) {
              for (std::size_t j = t + 1; j < n; ++j) {
                if (sgn(a[i][j] % a[t][t]) != 0) {
                  for (std::size_t k = t; k < n; ++k) {
                    a[t][k] += a[i][k];
                  }
                  clean = false;
                  break;
                }
              }
            }
          }
        }
        diag.push_back(abs(a[t][t]));
        ++t;
      }
      return diag;
    }
  }  // namespace detail

  // Nonzero elementary divisors of the integer matrix with the given sparse
  // rows.  Unit pivots are eliminated sparsely; the rest goes to a dense
  // Smith form.
  inline std::vector<Integer> elementary_divisors(std::vector<IntSparseRow> rows) {
    std::vector<Integer>                 out;
    std::unordered_map<int, std::set<std::size_t>> col_rows;
    std::vector<bool>                    alive(rows.size(), true);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      for (auto const& [c, x] : rows[r]) {
        col_rows[c].insert(r);
      }
    }
    auto drop_entry = [&](std::size_t r, int c) {
      auto it = col_rows.find(c);
      if (it != col_rows.end()) {
        it->second.erase(r);
      }
    };
    bool progress = true;
    while (progress) {
      progress = false;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (!alive[r]) {
          continue;
        }
        if (rows[r].empty()) {
          alive[r] = false;
          continue;
        }
        auto unit = std::find_if(rows[r].begin(), rows[r].end(), [](auto const& e) {
          return abs(e.second) == 1;
        });
        if (unit == rows[r].end()) {
          continue;
        }
        int const         c = unit->first;
        Integer const     u = unit->second;
        IntSparseRow const pivot_row = rows[r];
        std::vector<std::size_t> others(col_rows[c].begin(), col_rows[c].end());
        for (std::size_t o : others) {
          if (o == r || !alive[o]) {
            continue;
          }
          Integer f = rows[o].at(c) * u;
          for (auto const& [k, x] : pivot_row) {
            auto& slot = rows[o][k];
            bool  was  = sgn(slot) != 0;
            slot -= f * x;
            if (sgn(slot) == 0) {
              rows[o].erase(k);
              if (was) {
                drop_entry(o, k);
              }
            } else if (!was) {
              col_rows[k].insert(o);
            }
          }
        }
        for (auto const& [k, x] : pivot_row) {
          drop_entry(r, k);
        }
        alive[r] = false;
        col_rows.erase(c);
        out.emplace_back(1);
        progress = true;
      }
    }
    std::vector<std::size_t> rest;
    std::map<int, std::size_t> cols;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (alive[r] && !rows[r].empty()) {
        rest.push_back(r);
        for (auto const& [c, x] : rows[r]) {
          cols.emplace(c, 0);
        }
      }
    }
    std::size_t idx = 0;
    for (auto& [c, j] : cols) {
      j = idx++;
    }
    std::vector<std::vector<Integer>> dense(rest.size(), std::vector<Integer>(cols.size()));
    for (std::size_t i = 0; i < rest.size(); ++i) {
      for (auto const& [c, x] : rows[rest[i]]) {
        dense[i][cols[c]] = x;
      }
    }
    auto tail = detail::dense_smith(std::move(dense));
    out.insert(out.end(), tail.begin(), tail.end());
    return out;
  }

}  // namespace surfbraid

#endif  // SURFBRAID_LINALG_HPP_
