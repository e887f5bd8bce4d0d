#ifndef YBE_IO_HPP_
#define YBE_IO_HPP_

// JSON documents for solutions and CSV helpers.
//
//   {"n": 3, "sigma": [[...], ...], "tau": [[...], ...],
//    "meta": {"family": "standard", "t": 0, "a": 1, "level": 1}}
//
// Row y of "tau" is the permutation tau_y.

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cocyclic.hpp"
#include "error.hpp"
#include "solution.hpp"

namespace ybe {

  struct SolutionMeta {
    std::optional<std::string> family;
    std::optional<Int>         t;
    std::optional<Int>         a;
    std::optional<Int>         level;
  };

  struct SolutionDocument {
    SolutionTable solution;
    SolutionMeta  meta;
  };

  namespace detail {

    inline std::vector<std::vector<Point>> to_matrix(std::vector<Point> const& v,
                                                     std::size_t            n) {
      std::vector<std::vector<Point>> out(n);
      for (std::size_t i = 0; i < n; ++i) {
        out[i].assign(v.begin() + i * n, v.begin() + (i + 1) * n);
      }
      return out;
    }

    inline std::vector<Point> from_matrix(nlohmann::json const& j,
                                          std::size_t n, char const* name) {
      if (!j.is_array() || j.size() != n) {
        throw ParameterError(std::string("\"") + name + "\" must have n rows");
      }
      std::vector<Point> out;
      out.reserve(n * n);
      for (auto const& row : j) {
        if (!row.is_array() || row.size() != n) {
          throw ParameterError(std::string("\"") + name
                               + "\" rows must have n entries");
        }
        for (auto const& v : row) {
          if (!v.is_number_integer() || v.get<std::int64_t>() < 0
              || static_cast<std::uint64_t>(v.get<std::int64_t>()) >= n) {
            throw ParameterError(std::string("\"") + name
                                 + "\" entries must be integers in [0, n)");
          }
          out.push_back(static_cast<Point>(v.get<std::int64_t>()));
        }
      }
      return out;
    }

    inline std::optional<Int> opt_int(nlohmann::json const& m, char const* key) {
      if (!m.contains(key)) {
        return std::nullopt;
      }
      auto const& v = m.at(key);
      if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
        throw ParameterError(std::string("meta.") + key
                             + " must be a non-negative integer");
      }
      return static_cast<Int>(v.get<std::int64_t>());
    }

  }  // namespace detail

  inline nlohmann::ordered_json to_json(SolutionTable const& s,
                                        SolutionMeta const&  meta = {}) {
    nlohmann::ordered_json j;
    j["n"]     = s.size();
    j["sigma"] = detail::to_matrix(s.sigma_table(), s.size());
    j["tau"]   = detail::to_matrix(s.tau_table(), s.size());
    if (meta.family || meta.t || meta.a || meta.level) {
      nlohmann::ordered_json m = nlohmann::ordered_json::object();
      if (meta.family) {
        m["family"] = *meta.family;
      }
      if (meta.t) {
        m["t"] = *meta.t;
      }
      if (meta.a) {
        m["a"] = *meta.a;
      }
      if (meta.level) {
        m["level"] = *meta.level;
      }
      j["meta"] = std::move(m);
    }
    return j;
  }

  //! Throws ParameterError on malformed text or tables.  The tables are not
  //! checked against the solution axioms.
  inline SolutionDocument parse_document(std::string const& text) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (nlohmann::json::parse_error const& e) {
      throw ParameterError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("sigma")
        || !j.contains("tau")) {
      throw ParameterError("document needs keys \"n\", \"sigma\", \"tau\"");
    }
    if (!j["n"].is_number_integer() || j["n"].get<std::int64_t>() <= 0) {
      throw ParameterError("\"n\" must be a positive integer");
    }
    auto const n = static_cast<std::size_t>(j["n"].get<std::int64_t>());
    if (n > kMaxTableOrder) {
      throw ResourceError("document order exceeds the table cap");
    }
    auto sigma = detail::from_matrix(j["sigma"], n, "sigma");
    auto tau   = detail::from_matrix(j["tau"], n, "tau");

    SolutionMeta meta;
    if (j.contains("meta")) {
      auto const& m = j["meta"];
      if (!m.is_object()) {
        throw ParameterError("\"meta\" must be an object");
      }
      if (m.contains("family")) {
        if (!m["family"].is_string()) {
          throw ParameterError("meta.family must be a string");
        }
        meta.family = m["family"].get<std::string>();
      }
      meta.t     = detail::opt_int(m, "t");
      meta.a     = detail::opt_int(m, "a");
      meta.level = detail::opt_int(m, "level");
    }
    return {SolutionTable(n, std::move(sigma), std::move(tau)), std::move(meta)};
  }

  //! Comma-separated row followed by a newline.
  template <typename Range>
  void write_csv_row(std::ostream& out, Range const& cells) {
    bool first = true;
    for (auto const& c : cells) {
      if (!first) {
        out << ',';
      }
      out << c;
      first = false;
    }
    out << '\n';
  }

}  // namespace ybe

#endif  // YBE_IO_HPP_
