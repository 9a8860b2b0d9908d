#include "cake/json_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace cake {

namespace {

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw SchemaError(where + ": missing \"" + key + "\"");
  return j.at(key);
}

std::string text_field(const Json& j, const char* key, const std::string& where) {
  const Json& v = field(j, key, where);
  if (!v.is_string()) throw SchemaError(where + ": \"" + key + "\" must be a string");
  return v.get<std::string>();
}

Rational rational_field(const Json& v, const std::string& where) {
  if (!v.is_string()) throw SchemaError(where + ": rationals are written as \"p/q\" strings");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const DomainError& e) {
    throw SchemaError(where + ": " + e.what());
  }
}

Json interval_json(const Interval& iv) { return Json::array({format_rational(iv.lo), format_rational(iv.hi)}); }

}  // namespace

Json to_json(const NamedValuation& v) {
  Json density = Json::array();
  for (const auto& s : v.valuation.segments())
    density.push_back({{"from", format_rational(s.span.lo)},
                       {"to", format_rational(s.span.hi)},
                       {"weight", format_rational(s.density)}});
  return {{"name", v.name}, {"density", density}};
}

NamedValuation valuation_from_json(const Json& j) {
  std::string name = text_field(j, "name", "valuation");
  const std::string where = "valuation '" + name + "'";
  const Json& density = field(j, "density", where);
  if (!density.is_array()) throw SchemaError(where + ": \"density\" must be an array");
  std::vector<DensitySegment> segments;
  for (const auto& seg : density) {
    Rational lo = rational_field(field(seg, "from", where), where);
    Rational hi = rational_field(field(seg, "to", where), where);
    Rational w = rational_field(field(seg, "weight", where), where);
    try {
      segments.push_back({Interval(lo, hi), w});
    } catch (const DomainError& e) {
      throw SchemaError(where + ": " + e.what());
    }
  }
  try {
    return {name, Valuation(std::move(segments))};
  } catch (const DomainError& e) {
    throw SchemaError(where + ": " + e.what());
  }
}

Json to_json(const Instance& inst) {
  Json players = Json::array();
  for (const auto& p : inst.players) players.push_back(to_json(p));
  return {{"players", players}};
}

Instance instance_from_json(const Json& j) {
  const Json& players = field(j, "players", "instance");
  if (!players.is_array() || players.empty()) throw SchemaError("instance: \"players\" must be a nonempty array");
  Instance inst;
  std::set<std::string> seen;
  for (const auto& p : players) {
    inst.players.push_back(valuation_from_json(p));
    if (!seen.insert(inst.players.back().name).second)
      throw SchemaError("instance: duplicate player name '" + inst.players.back().name + "'");
  }
  return inst;
}

Json parse_json_text(const std::string& text, const std::string& where) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError(where + ": " + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str(), path);
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw SchemaError("cannot write " + path);
  out << text;
}

Instance load_instance(const std::string& path) { return instance_from_json(read_json_file(path)); }

Json to_json(const Division& d, const std::vector<std::string>& names) {
  if (names.size() != d.size()) throw DomainError("one name per piece required");
  Json pieces = Json::array();
  for (std::size_t i = 0; i < d.size(); ++i) {
    Json intervals = Json::array();
    for (const auto& iv : d.pieces[i].intervals()) intervals.push_back(interval_json(iv));
    pieces.push_back({{"player", names[i]}, {"intervals", intervals}, {"value", format_rational(d.values[i])}});
  }
  return {{"algorithm", d.algorithm},
          {"order", names},
          {"pieces", pieces},
          {"ledger", {{"eval", d.ledger.eval_count()}, {"cut", d.ledger.cut_count()}}}};
}


LoadedDivision division_from_json(const Json& j, const Instance& inst) {
  LoadedDivision out;
  Division& d = out.division;
  d.algorithm = text_field(j, "algorithm", "division");
  const Json& pieces = field(j, "pieces", "division");
  if (!pieces.is_array()) throw SchemaError("division: \"pieces\" must be an array");
  d.pieces.assign(inst.size(), Subcake{});
  std::vector<bool> filled(inst.size(), false);
  for (const auto& p : pieces) {
    std::string name = text_field(p, "player", "division piece");
    std::size_t i = 0;
    while (i < inst.size() && inst.players[i].name != name) ++i;
    if (i == inst.size()) throw SchemaError("division: player '" + name + "' is not in the instance");
    if (filled[i]) throw SchemaError("division: player '" + name + "' has two pieces");
    filled[i] = true;
    const Json& intervals = field(p, "intervals", "division piece of '" + name + "'");
    if (!intervals.is_array()) throw SchemaError("division: \"intervals\" must be an array");
    std::vector<Interval> parts;
    for (const auto& iv : intervals) {
      if (!iv.is_array() || iv.size() != 2) throw SchemaError("division: each interval is a [lo, hi] pair");
      try {
        parts.emplace_back(rational_field(iv[0], "division"), rational_field(iv[1], "division"));
      } catch (const DomainError& e) {
        throw SchemaError(std::string("division: ") + e.what());
      }
    }
    d.pieces[i] = Subcake(std::move(parts));
  }
  for (std::size_t i = 0; i < inst.size(); ++i)
    if (!filled[i]) throw SchemaError("division: no piece for player '" + inst.players[i].name + "'");
  for (const auto& piece : d.pieces) d.ambient = d.ambient.unite(piece);
  for (std::size_t i = 0; i < inst.size(); ++i)
    d.values.push_back(oracle_direct_measure(inst.players[i].valuation, d.pieces[i]));
  if (j.contains("ledger")) {
    const Json& l = j.at("ledger");
    if (!l.is_object() || !l.contains("eval") || !l.contains("cut") || !l.at("eval").is_number_unsigned() ||
        !l.at("cut").is_number_unsigned())
      throw SchemaError("division: \"ledger\" needs unsigned \"eval\" and \"cut\"");
    out.counts = {l.at("eval").get<std::size_t>(), l.at("cut").get<std::size_t>()};
  }
  return out;
}

Json to_json(const Witness& w, const std::vector<std::string>& names) {
  Json j{{"player", names.at(w.player)}};
  if (w.other) j["other"] = names.at(*w.other);
  j["held"] = format_rational(w.held);
  j["compared"] = format_rational(w.compared);
  if (w.order) {
    Json order = Json::array();
    for (std::size_t k : *w.order) order.push_back(names.at(k));
    j["order"] = order;
  }
  return j;
}

Json to_json(const FairnessReport& r, const std::vector<std::string>& names) {
  Json table = Json::array();
  for (std::size_t i = 0; i < r.value_table.size(); ++i) {
    Json row = Json::array();
    for (const auto& v : r.value_table[i]) row.push_back(format_rational(v));
    table.push_back({{"player", names.at(i)}, {"values", row}});
  }
  Json verdicts = Json::array();
  for (const auto& v : r.verdicts) {
    Json e{{"property", v.property}, {"pass", v.pass}};
    if (v.witness) e["witness"] = to_json(*v.witness, names);
    verdicts.push_back(e);
  }
  Json ledger{{"eval", r.eval_count}, {"cut", r.cut_count}};
  if (r.query_bound) ledger["bound"] = *r.query_bound;
  return {{"algorithm", r.algorithm}, {"pass", r.pass()}, {"verdicts", verdicts}, {"values", table}, {"ledger", ledger}};
}

Json to_json(const SymmetrySweep& s, const std::string& algorithm, const std::vector<std::string>& names) {
  Json rows = Json::array();
  for (const auto& run : s.runs) {
    Json order = Json::array();
    for (std::size_t k : run.order) order.push_back(names.at(k));
    Json values = Json::object();
    for (std::size_t i = 0; i < run.values.size(); ++i) values[names.at(i)] = format_rational(run.values[i]);
    rows.push_back({{"order", order}, {"values", values}});
  }
  Json j{{"algorithm", algorithm}, {"symmetric", s.verdict.pass}, {"runs", rows}};
  if (s.verdict.witness) j["witness"] = to_json(*s.verdict.witness, names);
  return j;
}

}  // namespace cake
