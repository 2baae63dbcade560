#include "fanohodge/serialize.hpp"

#include <cmath>
#include <cstdint>
#include <sstream>

#include "fanohodge/errors.hpp"

namespace fanohodge {

Json to_json(const Integer& value) { return value.get_str(); }

Json to_json(const LaurentPoly& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) out.push_back(Json::array({e, c.get_str()}));
  return out;
}

Json to_json(const BiPoly& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) {
    out.push_back(Json::array({Json::array({e.first, e.second}), c.get_str()}));
  }
  return out;
}

Json to_json(const MotivicExpression& expression) {
  Json terms = Json::array();
  for (const auto& [i, multiplicity] : expression.terms()) {
    terms.push_back(Json::array({i, to_json(multiplicity)}));
  }
  Json out;
  out["genus"] = expression.genus();
  out["terms"] = std::move(terms);
  return out;
}

Json to_json(const HodgeDiamond& dia) {
  Json table = Json::array();
  for (const auto& row : dia.rows()) {
    Json json_row = Json::array();
    for (const auto& h : row) {
      // Hodge numbers beyond 64 bits fall back to decimal strings.
      if (h.fits_ulong_p()) {
        json_row.push_back(static_cast<std::uint64_t>(h.get_ui()));
      } else {
        json_row.push_back(h.get_str());
      }
    }
    table.push_back(std::move(json_row));
  }
  Json out;
  out["dimension"] = dia.dimension();
  out["hodge"] = std::move(table);
  return out;
}

namespace {

Json value_json(const ReportValue& value) {
  return std::visit([](const auto& v) { return to_json(v); }, value);
}

}  // namespace

Json to_json(const VerificationReport& report, bool include_timing) {
  Json params = Json::object();
  for (const auto& p : report.params) params[p.name] = p.value;

  Json out;
  out["identity"] = report.identity;
  out["params"] = std::move(params);
  out["status"] = std::string(to_string(report.status()));
  out["lhs"] = value_json(report.lhs);
  out["rhs"] = value_json(report.rhs);
  if (!report.effectivity.empty()) {
    Json checks = Json::array();
    for (const auto& check : report.effectivity) {
      Json entry;
      entry["i"] = check.index;
      entry["effective"] = check.effective;
      checks.push_back(std::move(entry));
    }
    out["effectivity"] = std::move(checks);
  }
  if (report.lefschetz_symmetric) out["lefschetz_symmetric"] = *report.lefschetz_symmetric;
  if (!report.notes.empty()) out["notes"] = report.notes;
  out["elapsed_ms"] = include_timing ? std::round(report.elapsed.count() * 1000.0) / 1000.0 : 0.0;
  return out;
}

namespace {

// Runs a parser, mapping nlohmann type and range errors to DomainError.
template <typename Parse>
auto guarded(std::string_view what, Parse&& parse) {
  try {
    return parse();
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string(what) + ": " + e.what());
  } catch (const std::invalid_argument&) {
    throw DomainError(std::string(what) + ": invalid integer");
  }
}

void require(bool condition, std::string_view message) {
  if (!condition) throw DomainError(std::string(message));
}

}  // namespace

Integer integer_from_json(const Json& json) {
  return guarded("integer", [&] { return Integer(json.get<std::string>()); });
}

LaurentPoly laurent_from_json(const Json& json) {
  return guarded("laurent polynomial", [&] {
    require(json.is_array(), "laurent polynomial: expected an array");
    LaurentPoly::Terms terms;
    for (const auto& term : json) {
      require(term.is_array() && term.size() == 2, "laurent polynomial: expected [exponent, coefficient]");
      const auto [it, fresh] = terms.emplace(term[0].get<int>(), integer_from_json(term[1]));
      require(fresh, "laurent polynomial: repeated exponent");
    }
    return LaurentPoly::from_terms(std::move(terms));
  });
}

BiPoly bipoly_from_json(const Json& json) {
  return guarded("bivariate polynomial", [&] {
    require(json.is_array(), "bivariate polynomial: expected an array");
    BiPoly::Terms terms;
    for (const auto& term : json) {
      require(term.is_array() && term.size() == 2 && term[0].is_array() && term[0].size() == 2,
              "bivariate polynomial: expected [[p, q], coefficient]");
      const BiExponent e{term[0][0].get<int>(), term[0][1].get<int>()};
      const auto [it, fresh] = terms.emplace(e, integer_from_json(term[1]));
      require(fresh, "bivariate polynomial: repeated exponent");
    }
    return BiPoly::from_terms(std::move(terms));
  });
}

MotivicExpression motivic_from_json(const Json& json) {
  return guarded("motivic expression", [&] {
    MotivicExpression out(json.at("genus").get<int>());
    for (const auto& term : json.at("terms")) {
      require(term.is_array() && term.size() == 2, "motivic expression: expected [index, multiplicity]");
      out.add(term[0].get<int>(), laurent_from_json(term[1]));
    }
    return out;
  });
}

HodgeDiamond diamond_from_json(const Json& json) {
  return guarded("hodge diamond", [&] {
    std::vector<std::vector<Integer>> rows;
    for (const auto& json_row : json.at("hodge")) {
      auto& row = rows.emplace_back();
      for (const auto& h : json_row) {
        row.push_back(h.is_string() ? Integer(h.get<std::string>()) : Integer(h.get<std::uint64_t>()));
      }
    }
    return HodgeDiamond(json.at("dimension").get<int>(), std::move(rows));
  });
}

ReportValue report_value_from_json(const Json& json) {
  if (json.is_string()) return integer_from_json(json);
  if (json.is_object()) return motivic_from_json(json);
  require(json.is_array(), "report value: expected a string, object or array");
  if (!json.empty() && json[0].is_array() && !json[0].empty() && json[0][0].is_array()) {
    return bipoly_from_json(json);
  }
  return laurent_from_json(json);
}

VerificationReport report_from_json(const Json& json) {
  return guarded("report", [&] {
    VerificationReport report;
    report.identity = json.at("identity").get<std::string>();
    for (const auto& [name, value] : json.at("params").items()) {
      report.params.push_back({name, value.get<long>()});
    }
    report.lhs = report_value_from_json(json.at("lhs"));
    report.rhs = report_value_from_json(json.at("rhs"));
    if (json.contains("effectivity")) {
      for (const auto& check : json.at("effectivity")) {
        report.effectivity.push_back({check.at("i").get<int>(), check.at("effective").get<bool>()});
      }
    }
    if (json.contains("lefschetz_symmetric")) report.lefschetz_symmetric = json.at("lefschetz_symmetric").get<bool>();
    if (json.contains("notes")) report.notes = json.at("notes").get<std::vector<std::string>>();
    report.elapsed = Milliseconds(json.at("elapsed_ms").get<double>());
    require(json.at("status").get<std::string>() == to_string(report.status()),
            "report: status disagrees with lhs/rhs/effectivity");
    return report;
  });
}

std::string to_string(const MotivicExpression& expression) {
  if (expression.terms().empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [i, multiplicity] : expression.terms()) {
    if (!first) out << " + ";
    first = false;
    out << '(' << to_string(multiplicity, "L") << ')';
    if (i == 1) {
      out << "[C]";
    } else if (i > 1) {
      out << "[Sym^" << i << " C]";
    }
  }
  return out.str();
}

std::string to_string(const ReportValue& value) {
  struct Visitor {
    std::string operator()(const Integer& v) const { return v.get_str(); }
    std::string operator()(const LaurentPoly& v) const { return to_string(v, "t"); }
    std::string operator()(const BiPoly& v) const { return to_string(v); }
    std::string operator()(const MotivicExpression& v) const { return to_string(v); }
  };
  return std::visit(Visitor{}, value);
}

std::string render_text(const VerificationReport& report, const TextOptions& options) {
  std::ostringstream out;
  out << to_string(report.status()) << "  " << report.identity;
  for (const auto& p : report.params) out << ' ' << p.name << '=' << p.value;
  if (options.include_timing) {
    out << "  (" << std::round(report.elapsed.count() * 1000.0) / 1000.0 << " ms)";
  }
  out << '\n';
  if (!options.detailed) return out.str();

  out << "  lhs: " << to_string(report.lhs) << '\n';
  out << "  rhs: " << to_string(report.rhs) << '\n';
  if (!report.effectivity.empty()) {
    out << "  effectivity:";
    for (const auto& check : report.effectivity) {
      out << " i=" << check.index << (check.effective ? " ok" : " NOT-EFFECTIVE");
    }
    out << '\n';
  }
  if (report.lefschetz_symmetric) {
    out << "  lefschetz symmetric: " << (*report.lefschetz_symmetric ? "yes" : "no") << '\n';
  }
  for (const auto& note : report.notes) out << "  note: " << note << '\n';
  return out.str();
}

}  // namespace fanohodge
