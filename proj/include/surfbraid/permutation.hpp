#ifndef SURFBRAID_PERMUTATION_HPP_
#define SURFBRAID_PERMUTATION_HPP_

// Permutations of the strands {1..n}, stored 0-based as the image table.
// Products compose as maps: (p * q)(i) = p(q(i)).

#include <compare>
#include <cstddef>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"

namespace surfbraid {

  class Permutation {
   public:
    Permutation() = default;

    explicit Permutation(int n) : image_(static_cast<std::size_t>(n)) {
      std::iota(image_.begin(), image_.end(), 0);
    }

    // Image table, 0-based; throws if it is not a bijection.
    static Permutation from_images(std::vector<int> images) {
      Permutation        p;
      std::vector<bool>  seen(images.size(), false);
      for (int x : images) {
        if (x < 0 || static_cast<std::size_t>(x) >= images.size() || seen[x]) {
          throw ParseError("not a permutation");
        }
        seen[x] = true;
      }
      p.image_ = std::move(images);
      return p;
    }

    // The transposition of strands i and i+1 (1-based i).
    static Permutation adjacent(int n, int i) {
      Permutation p(n);
      std::swap(p.image_[i - 1], p.image_[i]);
      return p;
    }

    static Permutation transposition(int n, int i, int j) {
      Permutation p(n);
      std::swap(p.image_[i - 1], p.image_[j - 1]);
      return p;
    }

    [[nodiscard]] int size() const {
      return static_cast<int>(image_.size());
    }

    // 1-based application.
    [[nodiscard]] int operator()(int i) const {
      return image_[i - 1] + 1;
    }

    [[nodiscard]] std::vector<int> const& images() const {
      return image_;
    }

    [[nodiscard]] bool is_identity() const {
      for (std::size_t i = 0; i < image_.size(); ++i) {
        if (image_[i] != static_cast<int>(i)) {
          return false;
        }
      }
      return true;
    }

    [[nodiscard]] Permutation inverse() const {
      Permutation p;
      p.image_.resize(image_.size());
      for (std::size_t i = 0; i < image_.size(); ++i) {
        p.image_[image_[i]] = static_cast<int>(i);
      }
      return p;
    }

    // +1 or -1.
    [[nodiscard]] int sign() const {
      int               s = 1;
      std::vector<bool> seen(image_.size(), false);
      for (std::size_t i = 0; i < image_.size(); ++i) {
        if (seen[i]) {
          continue;
        }
        std::size_t len = 0;
        for (std::size_t j = i; !seen[j]; j = image_[j]) {
          seen[j] = true;
          ++len;
        }
        if (len % 2 == 0) {
          s = -s;
        }
      }
      return s;
    }

    friend Permutation operator*(Permutation const& p, Permutation const& q) {
      if (p.size() != q.size()) {
        throw DimensionError("permutations on different strand counts");
      }
      Permutation r;
      r.image_.resize(p.image_.size());
      for (std::size_t i = 0; i < p.image_.size(); ++i) {
        r.image_[i] = p.image_[q.image_[i]];
      }
      return r;
    }

    auto operator<=>(Permutation const&) const = default;

    // Cycle notation, e.g. "(1 2)(3)" with fixed points, "(1 2)" without.
    [[nodiscard]] std::string cycles(bool with_fixed_points) const {
      std::string       out;
      std::vector<bool> seen(image_.size(), false);
      for (std::size_t i = 0; i < image_.size(); ++i) {
        if (seen[i]) {
          continue;
        }
        if (image_[i] == static_cast<int>(i) && !with_fixed_points) {
          seen[i] = true;
          continue;
        }
        out += '(';
        bool first = true;
        for (std::size_t j = i; !seen[j]; j = image_[j]) {
          seen[j] = true;
          if (!first) {
            out += ' ';
          }
          out += std::to_string(j + 1);
          first = false;
        }
        out += ')';
      }
      return out;
    }

   private:
    std::vector<int> image_;
  };

  // "id" for the identity, otherwise cycles without fixed points.
  inline std::string to_string(Permutation const& p) {
    return p.is_identity() ? std::string("id") : p.cycles(false);
  }

  // Accepts "id" or cycle notation such as "(1 2)(3)" or "(1,2)".
  inline Permutation parse_permutation(std::string const& text, int n) {
    Permutation p(n);
    std::string t;
    for (char c : text) {
      if (c != ' ' && c != '\t') {
        t += c;
      }
    }
    if (t.empty() || t == "id") {
      return p;
    }
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 0);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    std::size_t       pos = 0;
    // Re-read with the separators kept, since "(12)" is ambiguous.
    std::string body;
    for (char c : text) {
      body += (c == ',' ? ' ' : c);
    }
    pos = 0;
    while (pos < body.size()) {
      if (body[pos] == ' ' || body[pos] == '\t') {
        ++pos;
        continue;
      }
      if (body[pos] != '(') {
        throw ParseError("bad permutation '" + text + "'");
      }
      auto close = body.find(')', pos);
      if (close == std::string::npos) {
        throw ParseError("unclosed cycle in '" + text + "'");
      }
      std::istringstream in(body.substr(pos + 1, close - pos - 1));
      std::vector<int>   cyc;
      int                x;
      while (in >> x) {
        if (x < 1 || x > n || used[x - 1]) {
          throw ParseError("bad cycle entry in '" + text + "'");
        }
        used[x - 1] = true;
        cyc.push_back(x - 1);
      }
      if (!in.eof() || cyc.empty()) {
        throw ParseError("bad cycle in '" + text + "'");
      }
      for (std::size_t k = 0; k < cyc.size(); ++k) {
        img[cyc[k]] = cyc[(k + 1) % cyc.size()];
      }
      pos = close + 1;
    }
    return Permutation::from_images(std::move(img));
  }

}  // namespace surfbraid

#endif  // SURFBRAID_PERMUTATION_HPP_
