#ifndef SURFBRAID_CONFIG_HPP_
#define SURFBRAID_CONFIG_HPP_

// Run configuration read from a flat "key = value" file, and the versioned
// plain-text cache for graded dimension tables.

#include <charconv>
#include <cstdint>
#include <stdexcept>
#include <system_error>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include "diagram.hpp"
#include "errors.hpp"
#include "surface.hpp"

namespace surfbraid {

  struct Config {
    SurfaceParams surface{1, 1, 2};
    Truncation    trunc{};
    int           window      = 6;
    std::size_t   node_budget = 1000000;
    std::string   cache_dir;
    int           jobs = 1;
    std::uint64_t seed = 0;

    // Surface computations need two strands; the symplectic algebra allows one.
    void validate(int min_strands = 2) const {
      if (surface.genus < 0 || surface.boundary < 0) {
        throw ParameterError("genus and boundary must be non-negative");
      }
      if (surface.strands < min_strands || surface.strands > 64) {
        throw ParameterError("strand count must lie in " + std::to_string(min_strands)
                             + "..64");
      }
      if (trunc.max_chords < 0 || trunc.max_beads < 0) {
        throw ParameterError("truncation bounds must be non-negative");
      }
      if (window < trunc.max_chords || window < trunc.max_beads) {
        throw ParameterError("window must be at least both truncation bounds");
      }
      if (jobs < 1) {
        throw ParameterError("jobs must be positive");
      }
    }
  };

  inline std::string trim(std::string s) {
    s.erase(0, s.find_first_not_of(" \t\r\n"));
    auto last = s.find_last_not_of(" \t\r\n");
    s.erase(last == std::string::npos ? 0 : last + 1);
    return s;
  }

  // The whole of `text` as a number; throws std::invalid_argument otherwise.
  template <typename T>
  T parse_number(std::string const& text) {
    T    value{};
    auto end       = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end) {
      throw std::invalid_argument(text);
    }
    return value;
  }

  // Blank lines and lines starting with '#' are skipped.
  inline Config parse_config(std::string const& text, Config cfg = {}) {
    std::istringstream in(text);
    std::string        line;
    int                lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      line = trim(line);
      if (line.empty() || line[0] == '#') {
        continue;
      }
      auto eq = line.find('=');
      if (eq == std::string::npos) {
        throw ParseError("config line " + std::to_string(lineno) + ": expected key = value");
      }
      std::string key = trim(line.substr(0, eq));
      std::string val = trim(line.substr(eq + 1));
      try {
        if (key == "genus") {
          cfg.surface.genus = parse_number<int>(val);
        } else if (key == "boundary") {
          cfg.surface.boundary = parse_number<int>(val);
        } else if (key == "strands") {
          cfg.surface.strands = parse_number<int>(val);
        } else if (key == "max_chords") {
          cfg.trunc.max_chords = parse_number<int>(val);
        } else if (key == "max_beads") {
          cfg.trunc.max_beads = parse_number<int>(val);
        } else if (key == "window") {
          cfg.window = parse_number<int>(val);
        } else if (key == "node_budget") {
          cfg.node_budget = parse_number<std::size_t>(val);
        } else if (key == "cache_dir") {
          cfg.cache_dir = val;
        } else if (key == "jobs") {
          cfg.jobs = parse_number<int>(val);
        } else if (key == "seed") {
          cfg.seed = parse_number<std::uint64_t>(val);
        } else {
          throw ParseError("config line " + std::to_string(lineno) + ": unknown key '" + key
                           + "'");
        }
      } catch (std::logic_error const&) {
        throw ParseError("config line " + std::to_string(lineno) + ": bad value '" + val + "'");
      }
    }
    return cfg;
  }

  inline Config load_config(std::filesystem::path const& path, Config cfg = {}) {
    std::ifstream in(path);
    if (!in) {
      throw ParameterError("cannot read config file " + path.string());
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str(), cfg);
  }

  inline constexpr char const* kDimsCacheTag = "# surfbraid symplectic-dims v1";

  struct DimsKey {
    SurfaceParams surface;
    int           max_degree     = 0;
    bool          include_twist  = true;
    bool          regrade_chords = false;
  };

  inline std::string cache_file_name(DimsKey const& k) {
    return "symplectic_g" + std::to_string(k.surface.genus) + "_p"
           + std::to_string(k.surface.boundary) + "_n" + std::to_string(k.surface.strands) + "_d"
           + std::to_string(k.max_degree) + (k.include_twist ? "" : "_notwist")
           + (k.regrade_chords ? "_regrade" : "") + ".txt";
  }

  // The cached table body, or nothing when absent or of another version.
  inline std::optional<std::string> read_dims_cache(std::filesystem::path const& dir,
                                                    DimsKey const&               k) {
    std::ifstream in(dir / cache_file_name(k));
    if (!in) {
      return std::nullopt;
    }
    std::string tag;
    std::getline(in, tag);
    if (tag != kDimsCacheTag) {
      return std::nullopt;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }

  inline void write_dims_cache(std::filesystem::path const& dir, DimsKey const& k,
                               std::string const& body) {
    std::filesystem::create_directories(dir);
    auto const    tmp = dir / (cache_file_name(k) + ".tmp");
    {
      std::ofstream out(tmp);
      if (!out) {
        throw ParameterError("cannot write cache file " + tmp.string());
      }
      out << kDimsCacheTag << "\n" << body;
    }
    std::filesystem::rename(tmp, dir / cache_file_name(k));
  }

}  // namespace surfbraid

#endif  // SURFBRAID_CONFIG_HPP_
