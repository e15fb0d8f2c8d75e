#ifndef SURFBRAID_SYMPLECTIC_HPP_
#define SURFBRAID_SYMPLECTIC_HPP_

// The graded algebra of symplectic chord diagrams: generators A_s^k, B_s^k
// of degree 1, boundary chords Z_{alpha k} (alpha = n+1..n+p) and chords
// Z_ij of degree 2, modulo the extended infinitesimal braid relations, the
// surface group relations, the mixed relations and, for g >= 1, the twist
// relation [A_s^i, B_s^j] = Z_ij.  Graded pieces are computed exactly.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "arith.hpp"
#include "errors.hpp"
#include "linalg.hpp"
#include "surface.hpp"

namespace surfbraid {

  enum class SympKind : std::uint8_t { A, B, Zb, Z };

  // A(s,k), B(s,k): first = s, second = k.  Zb(alpha,k) and Z(i,j), i < j.
  struct SympGenerator {
    SympKind kind   = SympKind::A;
    int      first  = 1;
    int      second = 1;
    int      degree = 1;

    auto operator<=>(SympGenerator const&) const = default;
  };

  inline std::string to_string(SympGenerator const& x) {
    std::string head;
    switch (x.kind) {
      case SympKind::A: head = "A"; break;
      case SympKind::B: head = "B"; break;
      case SympKind::Zb:
      case SympKind::Z: head = "Z"; break;
    }
    return head + "(" + std::to_string(x.first) + "," + std::to_string(x.second) + ")";
  }

  struct SympOptions {
    bool include_twist  = true;
    bool regrade_chords = false;  // chords in degree 1 (meaningful for g = 0)
  };

  using SympWord = std::vector<int>;

  struct SympElement {
    std::map<SympWord, Rational> terms;

    void add(SympWord const& w, Rational const& c) {
      if (sgn(c) == 0) {
        return;
      }
      auto& slot = terms[w];
      slot += c;
      if (sgn(slot) == 0) {
        terms.erase(w);
      }
    }
  };

  enum class SympFamily : std::uint8_t { InfinitesimalBraid, Fundamental, Mixed, Twist };

  struct SympRelation {
    SympFamily  family;
    SympElement element;
  };

  class SympAlgebra {
   public:
    SympAlgebra(SurfaceParams const& s, SympOptions opt) : params_(s), opt_(opt) {
      if (s.genus < 0 || s.boundary < 0 || s.strands < 1) {
        throw ParameterError("symplectic algebra needs g, p >= 0 and n >= 1");
      }
      if (opt.regrade_chords && s.genus > 0) {
        throw ParameterError("chords can be regraded to degree 1 only in genus 0");
      }
      int const n = s.strands, g = s.genus, p = s.boundary;
      int const zdeg = opt.regrade_chords ? 1 : 2;
      for (int t = 1; t <= g; ++t) {
        for (int k = 1; k <= n; ++k) {
          gens_.push_back({SympKind::A, t, k, 1});
        }
        for (int k = 1; k <= n; ++k) {
          gens_.push_back({SympKind::B, t, k, 1});
        }
      }
      for (int alpha = n + 1; alpha <= n + p; ++alpha) {
        for (int k = 1; k <= n; ++k) {
          gens_.push_back({SympKind::Zb, alpha, k, zdeg});
        }
      }
      for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
          gens_.push_back({SympKind::Z, i, j, zdeg});
        }
      }
      for (std::size_t k = 0; k < gens_.size(); ++k) {
        index_.emplace(gens_[k], static_cast<int>(k));
      }
      build_relations();
    }

    [[nodiscard]] std::vector<SympGenerator> const& generators() const {
      return gens_;
    }
    [[nodiscard]] std::vector<SympRelation> const& relations() const {
      return rels_;
    }

    [[nodiscard]] int degree(SympWord const& w) const {
      int d = 0;
      for (int x : w) {
        d += gens_[static_cast<std::size_t>(x)].degree;
      }
      return d;
    }

    // Degree of a homogeneous element; throws if it is not homogeneous.
    [[nodiscard]] int degree(SympElement const& e) const {
      int d = -1;
      for (auto const& [w, c] : e.terms) {
        int dw = degree(w);
        if (d >= 0 && dw != d) {
          throw Error("inhomogeneous symplectic element");
        }
        d = dw;
      }
      return d;
    }

    [[nodiscard]] std::string to_string(SympWord const& w) const {
      if (w.empty()) {
        return "1";
      }
      std::string out;
      for (std::size_t k = 0; k < w.size(); ++k) {
        out += (k == 0 ? "" : " ") + surfbraid::to_string(gens_[static_cast<std::size_t>(w[k])]);
      }
      return out;
    }

    [[nodiscard]] std::string to_string(SympElement const& e) const {
      if (e.terms.empty()) {
        return "0";
      }
      std::string out;
      bool        first = true;
      for (auto const& [w, c] : e.terms) {
        out += (first ? "" : " + ") + surfbraid::to_string(c) + " * " + to_string(w);
        first = false;
      }
      return out;
    }

    // All words of degree d, in a fixed order.  Throws ResourceError above cap.
    [[nodiscard]] std::vector<SympWord> words(int d, std::size_t cap) const {
      std::vector<std::vector<SympWord>> by_deg(static_cast<std::size_t>(std::max(d, 0)) + 1);
      by_deg[0].push_back({});
      for (int e = 1; e <= d; ++e) {
        auto& cur = by_deg[static_cast<std::size_t>(e)];
        for (std::size_t x = 0; x < gens_.size(); ++x) {
          int const gd = gens_[x].degree;
          if (gd > e) {
            continue;
          }
          for (auto const& w : by_deg[static_cast<std::size_t>(e - gd)]) {
            SympWord nw{static_cast<int>(x)};
            nw.insert(nw.end(), w.begin(), w.end());
            cur.push_back(std::move(nw));
            if (cur.size() > cap) {
              throw ResourceError("more than " + std::to_string(cap) + " words of degree "
                                  + std::to_string(e));
            }
          }
        }
      }
      auto out = std::move(by_deg[static_cast<std::size_t>(std::max(d, 0))]);
      std::sort(out.begin(), out.end());
      return out;
    }

    // dim of the degree-d piece: word count minus the rank of all u.r.v.
    [[nodiscard]] std::size_t graded_dim(int d, std::size_t cap = 200000) const {
      if (d < 0) {
        throw ParameterError("degree must be non-negative");
      }
      auto const               top = words(d, cap);
      std::map<SympWord, int>  col;
      for (auto const& w : top) {
        col.emplace(w, static_cast<int>(col.size()));
      }
      Echelon ech(false);
      for (auto const& r : rels_) {
        int const dr = degree(r.element);
        if (dr > d) {
          continue;
        }
        for (int du = 0; du <= d - dr; ++du) {
          auto const us = words(du, cap);
          auto const vs = words(d - dr - du, cap);
          for (auto const& u : us) {
            for (auto const& v : vs) {
              SparseVec row;
              for (auto const& [w, c] : r.element.terms) {
                SympWord full = u;
                full.insert(full.end(), w.begin(), w.end());
                full.insert(full.end(), v.begin(), v.end());
                axpy(row, c, SparseVec{{col.at(full), Rational(1)}});
              }
              ech.add(std::move(row));
              if (ech.rank() == top.size()) {
                return 0;
              }
            }
          }
        }
      }
      return top.size() - ech.rank();
    }

    // True when every Z_ij lies in the span of degree-1 products plus the
    // degree-2 relations.
    [[nodiscard]] bool twist_redundant() const {
      int const d = opt_.regrade_chords ? 1 : 2;
      auto const top = words(d, 1000000);
      std::map<SympWord, int> col;
      for (auto const& w : top) {
        col.emplace(w, static_cast<int>(col.size()));
      }
      Echelon ech(false);
      for (auto const& r : rels_) {
        if (degree(r.element) != d) {
          continue;
        }
        SparseVec row;
        for (auto const& [w, c] : r.element.terms) {
          axpy(row, c, SparseVec{{col.at(w), Rational(1)}});
        }
        ech.add(std::move(row));
      }
      for (auto const& w : top) {
        bool product = w.size() >= 2;
        if (product) {
          ech.add(SparseVec{{col.at(w), Rational(1)}});
        }
      }
      for (std::size_t x = 0; x < gens_.size(); ++x) {
        if (gens_[x].kind != SympKind::Z) {
          continue;
        }
        if (!ech.contains(SparseVec{{col.at(SympWord{static_cast<int>(x)}), Rational(1)}})) {
          return false;
        }
      }
      return true;
    }

    [[nodiscard]] int gen(SympKind k, int a, int b) const {
      if (k == SympKind::Z && a > b) {
        std::swap(a, b);
      }
      int const zdeg = opt_.regrade_chords ? 1 : 2;
      int const deg  = (k == SympKind::A || k == SympKind::B) ? 1 : zdeg;
      return index_.at(SympGenerator{k, a, b, deg});
    }

   private:
    // [x, y] for linear combinations x, y of generators.
    static SympElement bracket(SympElement const& x, SympElement const& y) {
      SympElement out;
      for (auto const& [u, a] : x.terms) {
        for (auto const& [v, b] : y.terms) {
          SympWord uv = u, vu = v;
          uv.insert(uv.end(), v.begin(), v.end());
          vu.insert(vu.end(), u.begin(), u.end());
          out.add(uv, a * b);
          out.add(vu, -a * b);
        }
      }
      return out;
    }

    static SympElement single(int x) {
      SympElement e;
      e.add({x}, 1);
      return e;
    }

    static SympElement sum(SympElement a, SympElement const& b) {
      for (auto const& [w, c] : b.terms) {
        a.add(w, c);
      }
      return a;
    }

    void push(SympFamily f, SympElement e) {
      if (!e.terms.empty()) {
        (void)degree(e);
        rels_.push_back({f, std::move(e)});
      }
    }

    void build_relations() {
      int const n = params_.strands, g = params_.genus, p = params_.boundary;
      auto A  = [&](int s, int k) { return single(gen(SympKind::A, s, k)); };
      auto B  = [&](int s, int k) { return single(gen(SympKind::B, s, k)); };
      auto Z  = [&](int i, int j) { return single(gen(SympKind::Z, i, j)); };
      auto Zb = [&](int alpha, int k) { return single(gen(SympKind::Zb, alpha, k)); };
      auto const IB = SympFamily::InfinitesimalBraid;

      // Extended infinitesimal braid relations.
      for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
          for (int k = 1; k <= n; ++k) {
            for (int l = k + 1; l <= n; ++l) {
              if (k != i && k != j && l != i && l != j && std::make_pair(i, j) < std::make_pair(k, l)) {
                push(IB, bracket(Z(i, j), Z(k, l)));
              }
            }
          }
        }
      }
      for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
          for (int k = 1; k <= n; ++k) {
            if (i != j && j != k && i != k) {
              push(IB, bracket(Z(i, j), sum(Z(j, k), Z(i, k))));
            }
          }
        }
      }
      for (int alpha = n + 1; alpha <= n + p; ++alpha) {
        for (int j = 1; j <= n; ++j) {
          for (int k = 1; k <= n; ++k) {
            for (int l = k + 1; l <= n; ++l) {
              if (j != k && j != l) {
                push(IB, bracket(Zb(alpha, j), Z(k, l)));
              }
            }
          }
        }
      }
      for (int alpha = n + 1; alpha <= n + p; ++alpha) {
        for (int j = 1; j <= n; ++j) {
          for (int beta = alpha + 1; beta <= n + p; ++beta) {
            for (int k = 1; k <= n; ++k) {
              if (j != k) {
                push(IB, bracket(Zb(alpha, j), Zb(beta, k)));
              }
            }
          }
        }
      }
      for (int alpha = n + 1; alpha <= n + p; ++alpha) {
        for (int j = 1; j <= n; ++j) {
          for (int k = 1; k <= n; ++k) {
            if (j != k) {
              push(IB, bracket(Zb(alpha, j), sum(Zb(alpha, k), Z(j, k))));
            }
          }
        }
      }

      // Surface group relations.
      auto const F = SympFamily::Fundamental;
      for (auto kind : {SympKind::A, SympKind::B}) {
        for (int s = 1; s <= g; ++s) {
          for (int i = 1; i <= n; ++i) {
            for (int r = 1; r <= g; ++r) {
              for (int k = 1; k <= n; ++k) {
                if (i != k && std::make_pair(s, i) < std::make_pair(r, k)) {
                  push(F, bracket(single(gen(kind, s, i)), single(gen(kind, r, k))));
                }
              }
            }
          }
        }
      }
      for (int s = 1; s <= g; ++s) {
        for (int i = 1; i <= n; ++i) {
          for (int r = 1; r <= g; ++r) {
            for (int j = 1; j <= n; ++j) {
              if (r != s && i != j) {
                push(F, bracket(A(s, i), B(r, j)));
              }
            }
          }
        }
      }
      for (int k = 1; k <= n; ++k) {
        SympElement e;
        for (int s = 1; s <= g; ++s) {
          e = sum(e, bracket(A(s, k), B(s, k)));
        }
        for (int j = 1; j <= n; ++j) {
          if (j != k) {
            e = sum(e, Z(j, k));
          }
        }
        for (int alpha = n + 1; alpha <= n + p; ++alpha) {
          e = sum(e, Zb(alpha, k));
        }
        push(F, std::move(e));
      }

      // Mixed relations.
      auto const M = SympFamily::Mixed;
      for (int s = 1; s <= g; ++s) {
        for (int j = 1; j <= n; ++j) {
          for (int k = j + 1; k <= n; ++k) {
            for (int i = 1; i <= n; ++i) {
              if (i != j && i != k) {
                push(M, bracket(Z(j, k), A(s, i)));
              }
            }
            push(M, bracket(sum(A(s, j), A(s, k)), Z(j, k)));
            push(M, bracket(sum(B(s, j), B(s, k)), Z(j, k)));
          }
        }
        for (int alpha = n + 1; alpha <= n + p; ++alpha) {
          for (int k = 1; k <= n; ++k) {
            for (int i = 1; i <= n; ++i) {
              if (i != k) {
                push(M, bracket(Zb(alpha, k), A(s, i)));
              }
            }
          }
        }
      }

      // Twist relation.
      if (opt_.include_twist && g >= 1) {
        for (int s = 1; s <= g; ++s) {
          for (int i = 1; i <= n; ++i) {
            for (int j = 1; j <= n; ++j) {
              if (i != j) {
                SympElement e = bracket(A(s, i), B(s, j));
                e.add({gen(SympKind::Z, i, j)}, -1);
                push(SympFamily::Twist, std::move(e));
              }
            }
          }
        }
      }
    }

    SurfaceParams                params_;
    SympOptions                  opt_;
    std::vector<SympGenerator>   gens_;
    std::map<SympGenerator, int> index_;
    std::vector<SympRelation>    rels_;
  };

  // Relations of degree <= d.
  inline std::vector<SympRelation> symp_relations(SurfaceParams const& s, int d,
                                                  SympOptions opt = {}) {
    if (d < 2) {
      throw ParameterError("symp_relations needs max degree >= 2");
    }
    SympAlgebra               alg(s, opt);
    std::vector<SympRelation> out;
    for (auto const& r : alg.relations()) {
      if (alg.degree(r.element) <= d) {
        out.push_back(r);
      }
    }
    return out;
  }

  inline std::size_t symp_graded_dim(SurfaceParams const& s, int d, SympOptions opt = {},
                                     std::size_t cap = 200000) {
    return SympAlgebra(s, opt).graded_dim(d, cap);
  }

  inline bool symp_twist_redundancy(SurfaceParams const& s) {
    if (s.genus < 1) {
      throw HypothesisError("the twist relation needs genus >= 1");
    }
    if (s.strands < 2) {
      throw HypothesisError("the twist relation needs at least two strands");
    }
    return SympAlgebra(s, {}).twist_redundant();
  }

}  // namespace surfbraid

#endif  // SURFBRAID_SYMPLECTIC_HPP_
