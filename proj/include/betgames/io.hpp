// Copyright 2026 The betgames Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BETGAMES_IO_HPP
#define BETGAMES_IO_HPP

#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "betgames/dominance.hpp"
#include "betgames/search.hpp"

namespace betgames::io {

using nlohmann::json;

inline constexpr const char* kGameSchema = "betgames/game-v1";
inline constexpr const char* kStrategySchema = "betgames/strategy-v1";
inline constexpr const char* kReportSchema = "betgames/report-v1";

template <class R>
R parse_value(const json& v, const std::string& locus) {
  try {
    if (v.is_string()) return numeric_traits<R>::parse(v.get<std::string>());
    if (v.is_number_integer()) return R(v.get<long long>());
    if (v.is_number_float()) return numeric_traits<R>::from_double(v.get<double>());
  } catch (const std::exception& e) {
    throw ValidationError(e.what(), locus);
  }
  throw ValidationError("expected a number or a numeric string", locus);
}

template <class R>
std::string value_str(const R& v) {
  return numeric_traits<R>::str(v);
}

inline const json& require(const json& doc, const std::string& key, const std::string& locus) {
  if (!doc.contains(key)) throw ValidationError("missing field '" + key + "'", locus);
  return doc.at(key);
}

inline Construction parse_construction(const std::string& name) {
  for (auto c : {Construction::action_bets, Construction::independent_action_bets,
                 Construction::profile_bets, Construction::set_bets})
    if (name == construction_name(c)) return c;
  throw ValidationError("unknown construction '" + name + "'");
}

// ---------------------------------------------------------------------------
// Game documents

template <class R>
json game_to_json(const Game<R>& game) {
  json doc;
  doc["schema"] = kGameSchema;
  doc["kind"] = game.is_normal_form() ? "normal-form" : "bayesian";
  doc["players"] = game.players;
  doc["actions"] = game.actions;
  if (!game.is_normal_form()) {
    doc["types"] = game.types;
    json prior = json::array();
    std::vector<int> tdig(static_cast<std::size_t>(game.num_players()));
    for (std::size_t t = 0; t < game.type_space.size(); ++t) {
      game.type_space.decode(t, tdig);
      json entry;
      json labels = json::array();
      for (int i = 0; i < game.num_players(); ++i) labels.push_back(game.types[i][tdig[i]]);
      entry["types"] = labels;
      entry["p"] = value_str(game.prior[t]);
      prior.push_back(entry);
    }
    doc["prior"] = prior;
  }
  json utilities = json::array();
  std::vector<int> adig(static_cast<std::size_t>(game.num_players()));
  for (int i = 0; i < game.num_players(); ++i)
    for (int t = 0; t < game.num_types(i); ++t)
      for (std::size_t p = 0; p < game.action_space.size(); ++p) {
        game.action_space.decode(p, adig);
        json entry;
        entry["player"] = game.players[i];
        if (!game.is_normal_form()) entry["type"] = game.types[i][t];
        json profile = json::array();
        for (int j = 0; j < game.num_players(); ++j)
          profile.push_back(game.actions[j][adig[j]]);
        entry["profile"] = profile;
        entry["value"] = value_str(game.utility(i, t, p));
        utilities.push_back(entry);
      }
  doc["utilities"] = utilities;
  return doc;
}

template <class R>
Game<R> game_from_json(const json& doc) {
  Game<R> game;
  if (!doc.is_object()) throw ValidationError("game document must be an object", "");
  const std::string schema = doc.value("schema", kGameSchema);
  if (schema != kGameSchema)
    throw ValidationError("unsupported schema '" + schema + "'", "/schema");
  const std::string kind = require(doc, "kind", "").get<std::string>();
  if (kind != "normal-form" && kind != "bayesian")
    throw ValidationError("kind must be 'normal-form' or 'bayesian'", "/kind");

  game.players = require(doc, "players", "").get<std::vector<std::string>>();
  const int n = static_cast<int>(game.players.size());

  const json& actions = require(doc, "actions", "");
  if (!actions.is_array() || static_cast<int>(actions.size()) != n)
    throw ValidationError("actions must list one action set per player", "/actions");
  game.actions.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (const json& a : actions[i]) {
      if (a.is_string()) {
        game.actions[i].push_back(a.get<std::string>());
      } else {
        throw ValidationError("action labels must be strings",
                              "/actions/" + std::to_string(i));
      }
    }

  if (kind == "bayesian") {
    game.types = require(doc, "types", "").get<std::vector<std::vector<std::string>>>();
    if (static_cast<int>(game.types.size()) != n)
      throw ValidationError("types must list one type set per player", "/types");
    std::vector<int> radices;
    for (const auto& t : game.types) radices.push_back(static_cast<int>(t.size()));
    const ProfileSpace tspace{radices};
    game.prior.assign(tspace.size(), R(0));
    std::vector<char> seen(tspace.size(), 0);
    const json& prior = require(doc, "prior", "");
    for (std::size_t k = 0; k < prior.size(); ++k) {
      const std::string locus = "/prior/" + std::to_string(k);
      const json& entry = prior[k];
      const auto labels = require(entry, "types", locus).get<std::vector<std::string>>();
      if (static_cast<int>(labels.size()) != n)
        throw ValidationError("type profile must name every player's type", locus);
      std::vector<int> digits(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) {
        const auto& tl = game.types[i];
        const auto it = std::find(tl.begin(), tl.end(), labels[i]);
        if (it == tl.end()) throw ValidationError("unknown type '" + labels[i] + "'", locus);
        digits[i] = static_cast<int>(it - tl.begin());
      }
      const std::size_t idx = tspace.index_of(digits);
      if (seen[idx]) throw ValidationError("duplicate type profile", locus);
      seen[idx] = 1;
      game.prior[idx] = parse_value<R>(require(entry, "p", locus), locus + "/p");
    }
  }

  // dense utility tables, every (player, type, profile) exactly once
  std::vector<int> aradices;
  for (const auto& a : game.actions) aradices.push_back(static_cast<int>(a.size()));
  const ProfileSpace aspace{aradices};
  game.utilities.assign(static_cast<std::size_t>(n), {});
  std::vector<std::vector<char>> seen(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const std::size_t types = kind == "bayesian" ? game.types[i].size() : 1;
    game.utilities[i].assign(types * aspace.size(), R(0));
    seen[i].assign(types * aspace.size(), 0);
  }
  const json& utilities = require(doc, "utilities", "");
  for (std::size_t k = 0; k < utilities.size(); ++k) {
    const std::string locus = "/utilities/" + std::to_string(k);
    const json& entry = utilities[k];
    const std::string player = require(entry, "player", locus).get<std::string>();
    const auto pit = std::find(game.players.begin(), game.players.end(), player);
    if (pit == game.players.end())
      throw ValidationError("unknown player '" + player + "'", locus);
    const int i = static_cast<int>(pit - game.players.begin());
    int t = 0;
    if (kind == "bayesian") {
      const std::string type = require(entry, "type", locus).get<std::string>();
      const auto& tl = game.types[i];
      const auto it = std::find(tl.begin(), tl.end(), type);
      if (it == tl.end()) throw ValidationError("unknown type '" + type + "'", locus);
      t = static_cast<int>(it - tl.begin());
    }
    const auto labels = require(entry, "profile", locus).get<std::vector<std::string>>();
    if (static_cast<int>(labels.size()) != n)
      throw ValidationError("profile must name one action per player", locus);
    std::vector<int> digits(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
      const auto& al = game.actions[j];
      const auto it = std::find(al.begin(), al.end(), labels[j]);
      if (it == al.end()) throw ValidationError("unknown action '" + labels[j] + "'", locus);
      digits[j] = static_cast<int>(it - al.begin());
    }
    const std::size_t idx =
        static_cast<std::size_t>(t) * aspace.size() + aspace.index_of(digits);
    if (seen[i][idx]) throw ValidationError("duplicate utility entry", locus);
    seen[i][idx] = 1;
    game.utilities[i][idx] = parse_value<R>(require(entry, "value", locus), locus + "/value");
  }
  for (int i = 0; i < n; ++i)
    for (std::size_t idx = 0; idx < seen[i].size(); ++idx)
      if (!seen[i][idx])
        throw ValidationError("utility table for player " + game.players[i] +
                                  " is incomplete",
                              "/utilities");

  game.finalize();
  return game;
}

// ---------------------------------------------------------------------------
// Strategy documents

template <class R>
json strategy_to_json(const Game<R>& game, const StrategyProfile<R>& prof) {
  json doc;
  doc["schema"] = kStrategySchema;
  json strategies = json::array();
  for (int i = 0; i < game.num_players(); ++i)
    for (int t = 0; t < game.num_types(i); ++t) {
      json entry;
      entry["player"] = game.players[i];
      if (!game.is_normal_form()) entry["type"] = game.types[i][t];
      json dist = json::object();
      for (int a = 0; a < game.num_actions(i); ++a)
        if (!(prof.play[i][t][a] == R(0)))
          dist[game.actions[i][a]] = value_str(prof.play[i][t][a]);
      entry["distribution"] = dist;
      strategies.push_back(entry);
    }
  doc["strategies"] = strategies;
  return doc;
}

template <class R>
StrategyProfile<R> strategy_from_json(const Game<R>& game, const json& doc) {
  const std::string schema = doc.value("schema", kStrategySchema);
  if (schema != kStrategySchema)
    throw ValidationError("unsupported schema '" + schema + "'", "/schema");
  StrategyProfile<R> prof;
  prof.play.resize(game.num_players());
  std::vector<std::vector<char>> seen(static_cast<std::size_t>(game.num_players()));
  for (int i = 0; i < game.num_players(); ++i) {
    prof.play[i].assign(static_cast<std::size_t>(game.num_types(i)),
                        std::vector<R>(static_cast<std::size_t>(game.num_actions(i)), R(0)));
    seen[i].assign(static_cast<std::size_t>(game.num_types(i)), 0);
  }
  const json& strategies = require(doc, "strategies", "");
  for (std::size_t k = 0; k < strategies.size(); ++k) {
    const std::string locus = "/strategies/" + std::to_string(k);
    const json& entry = strategies[k];
    const int i = game.find_player(require(entry, "player", locus).get<std::string>());
    int t = 0;
    if (entry.contains("type")) {
      t = game.find_type(i, entry.at("type").get<std::string>());
    } else if (game.num_types(i) > 1) {
      throw ValidationError("player has multiple types; 'type' is required", locus);
    }
    if (seen[i][t]) throw ValidationError("duplicate strategy entry", locus);
    seen[i][t] = 1;
    const json& dist = require(entry, "distribution", locus);
    for (const auto& [label, value] : dist.items()) {
      const int a = game.find_action(i, label);
      prof.play[i][t][a] = parse_value<R>(value, locus + "/distribution");
    }
  }
  for (int i = 0; i < game.num_players(); ++i)
    for (int t = 0; t < game.num_types(i); ++t)
      if (!seen[i][t])
        throw ValidationError("missing strategy for player " + game.players[i] + ", type " +
                              game.types[i][t]);
  prof.validate(game);
  return prof;
}

// ---------------------------------------------------------------------------
// Extension documents: the extended game plus a self-describing block with
// the construction, constants, reference equilibrium, and (for set bets) the
// subset menus. Reloading rebuilds the extension and cross-checks the table.

template <class R>
json bet_to_json(const Game<R>& base, int player, const Bet& bet) {
  json out;
  switch (bet.kind) {
    case BetKind::none:
      out["kind"] = "none";
      break;
    case BetKind::action:
      out["kind"] = "action";
      out["target"] = base.players[bet.target];
      out["action"] = base.actions[bet.target][bet.target_action];
      break;
    case BetKind::set: {
      out["kind"] = "set";
      out["target"] = base.players[bet.target];
      json labels = json::array();
      for (int a : bet.action_set) labels.push_back(base.actions[bet.target][a]);
      out["actions"] = labels;
      break;
    }
    case BetKind::profile: {
      out["kind"] = "profile";
      json others = json::object();
      for (int j = 0; j < base.num_players(); ++j)
        if (j != player) others[base.players[j]] = base.actions[j][bet.others[j]];
      out["others"] = others;
      break;
    }
  }
  return out;
}

template <class R>
json extension_to_json(const Extension<R>& ext) {
  json doc = game_to_json(ext.game);
  json block;
  block["construction"] = construction_name(ext.spec.construction);
  block["penalty"] = value_str(ext.spec.penalty);
  block["span"] = {{"min", value_str(ext.spec.span.min)},
                   {"max", value_str(ext.spec.span.max)}};
  block["base"] = game_to_json(ext.base);
  block["sigma"] = strategy_to_json(ext.base, ext.spec.sigma);
  if (ext.spec.construction == Construction::set_bets) {
    json menus = json::array();
    for (int j = 0; j < ext.num_players(); ++j) {
      json menu = json::array();
      for (const auto& set : ext.spec.set_menus[j]) {
        json labels = json::array();
        for (int a : set) labels.push_back(ext.base.actions[j][a]);
        menu.push_back(labels);
      }
      menus.push_back(menu);
    }
    block["set_menus"] = menus;
  }
  json structured = json::array();
  for (int i = 0; i < ext.num_players(); ++i) {
    json list = json::array();
    for (const auto& ea : ext.ext_actions[i]) {
      json entry;
      entry["label"] = ext.game.actions[i].at(static_cast<std::size_t>(&ea - ext.ext_actions[i].data()));
      entry["base"] = ext.base.actions[i][ea.base];
      entry["bet"] = bet_to_json(ext.base, i, ea.bet);
      list.push_back(entry);
    }
    structured.push_back(list);
  }
  block["actions"] = structured;
  doc["extension"] = block;
  return doc;
}

template <class R>
Extension<R> extension_from_json(const json& doc) {
  const json& block = require(doc, "extension", "");
  const Game<R> base = game_from_json<R>(require(block, "base", "/extension"));
  const auto sigma = strategy_from_json(base, require(block, "sigma", "/extension"));
  const auto construction =
      parse_construction(require(block, "construction", "/extension").get<std::string>());
  BuildOptions<R> opts;
  opts.penalty = parse_value<R>(require(block, "penalty", "/extension"), "/extension/penalty");
  if (construction == Construction::profile_bets || construction == Construction::set_bets)
    opts.penalty.reset();  // pinned constants are rebuilt, then cross-checked below
  if (block.contains("set_menus")) {
    const json& menus = block.at("set_menus");
    for (int j = 0; j < base.num_players(); ++j) {
      std::vector<std::vector<int>> sets;
      for (const json& labels : menus.at(j)) {
        std::vector<int> set;
        for (const json& l : labels) set.push_back(base.find_action(j, l.get<std::string>()));
        sets.push_back(std::move(set));
      }
      opts.set_bets.explicit_sets[j] = std::move(sets);
    }
  }
  Extension<R> ext = build_extension(base, sigma, construction, opts);

  // cross-check against the stored table
  const Game<R> stored = game_from_json<R>(doc);
  if (stored.actions != ext.game.actions)
    throw ValidationError("stored extended actions do not match the rebuilt extension",
                          "/actions");
  if (stored.utilities != ext.game.utilities)
    throw ValidationError("stored utilities do not match the rebuilt extension", "/utilities");
  const R stored_penalty =
      parse_value<R>(block.at("penalty"), "/extension/penalty");
  if (stored_penalty != ext.spec.penalty)
    throw ValidationError("stored penalty does not match the construction",
                          "/extension/penalty");
  return ext;
}

// ---------------------------------------------------------------------------
// Files

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("invalid JSON: ") + e.what(), path);
  }
}

inline void write_json_atomic(const json& doc, const std::string& path, int indent = 1) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw ValidationError("cannot write '" + tmp + "'");
    out << doc.dump(indent) << "\n";
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw ValidationError("cannot move '" + tmp + "' into place");
}

template <class R>
struct LoadedGame {
  Game<R> game;
  std::optional<Extension<R>> extension;
};

template <class R>
LoadedGame<R> load_game_file(const std::string& path) {
  const json doc = read_json_file(path);
  LoadedGame<R> out;
  if (doc.contains("extension")) {
    out.extension = extension_from_json<R>(doc);
    out.game = out.extension->game;
  } else {
    out.game = game_from_json<R>(doc);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Report fragments shared by the CLI and the scenario runner

template <class R>
json regret_certificate_json(const Game<R>& game, const RegretCertificate<R>& cert, R tol) {
  json out;
  out["is_nash"] = cert.is_nash(tol);
  out["max_regret"] = value_str(cert.max_regret);
  if (cert.worst_player >= 0) out["worst_player"] = game.players[cert.worst_player];
  json players = json::array();
  for (const auto& pr : cert.entries) {
    json entry;
    entry["player"] = game.players[pr.player];
    entry["regret"] = value_str(pr.regret);
    json per_type = json::array();
    for (const auto& tr : pr.per_type) {
      json row;
      if (!game.is_normal_form()) row["type"] = game.types[pr.player][tr.type];
      row["best_action"] = game.actions[pr.player][tr.best_action];
      row["best_value"] = value_str(tr.best_value);
      row["current_value"] = value_str(tr.current_value);
      per_type.push_back(row);
    }
    entry["best_responses"] = per_type;
    players.push_back(entry);
  }
  out["players"] = players;
  return out;
}

template <class R>
json strategy_support_json(const Game<R>& game, const StrategyProfile<R>& prof) {
  json out = json::array();
  for (int i = 0; i < game.num_players(); ++i)
    for (int t = 0; t < game.num_types(i); ++t) {
      json entry;
      entry["player"] = game.players[i];
      if (!game.is_normal_form()) entry["type"] = game.types[i][t];
      json dist = json::object();
      for (int a = 0; a < game.num_actions(i); ++a)
        if (!(prof.play[i][t][a] == R(0)))
          dist[game.actions[i][a]] = value_str(prof.play[i][t][a]);
      entry["distribution"] = dist;
      out.push_back(entry);
    }
  return out;
}

template <class R>
json deviation_report_json(const Game<R>& game, const DeviationReport<R>& report) {
  json out;
  json coalition = json::array();
  for (int i : report.coalition) coalition.push_back(game.players[i]);
  out["coalition"] = coalition;
  json gains = json::array();
  for (const auto& g : report.gains) gains.push_back(value_str(g));
  out["gains"] = gains;
  out["all_strictly_gain"] = report.all_strictly_gain;
  out["internally_stable"] = report.internally_stable;
  out["projection_differs"] = report.projection_differs;
  out["marginal_increase"] = report.marginal_increase;
  json members = json::array();
  for (int i : report.coalition) {
    json entry;
    entry["player"] = game.players[i];
    json dist = json::array();
    for (int t = 0; t < game.num_types(i); ++t) {
      json d = json::object();
      for (int a = 0; a < game.num_actions(i); ++a)
        if (!(report.profile.play[i][t][a] == R(0)))
          d[game.actions[i][a]] = value_str(report.profile.play[i][t][a]);
      dist.push_back(d);
    }
    entry["strategy"] = dist;
    members.push_back(entry);
  }
  out["deviation"] = members;
  if (report.counter) {
    json counter;
    counter["member"] = game.players[report.counter->member];
    counter["gain"] = value_str(report.counter->gain);
    counter["method"] = report.counter->method;
    json d = json::array();
    for (int t = 0; t < game.num_types(report.counter->member); ++t) {
      json row = json::object();
      for (int a = 0; a < game.num_actions(report.counter->member); ++a)
        if (!(report.counter->strategy.play[report.counter->member][t][a] == R(0)))
          row[game.actions[report.counter->member][a]] =
              value_str(report.counter->strategy.play[report.counter->member][t][a]);
      d.push_back(row);
    }
    counter["strategy"] = d;
    out["counter_deviation"] = counter;
  }
  return out;
}

template <class R>
json search_result_json(const Game<R>& game, const SearchResult<R>& result,
                        const SearchConfig<R>& cfg) {
  json out;
  out["semi_strong_over_searched_space"] = !result.refuted;
  out["refuted"] = result.refuted;
  out["candidates_checked"] = result.candidates_checked;
  out["gaining_deviations"] = result.gaining;
  json coverage;
  coverage["coalition_cap"] = cfg.coalition_cap;
  coverage["mixed_grid"] = cfg.mixed_grid;
  coverage["truncated"] = result.truncated;
  coverage["notes"] = result.coverage;
  coverage["disclaimer"] =
      "verdicts cover the searched deviation space only (all pure joint deviations up to the "
      "coalition cap, plus the mixed grid when enabled)";
  out["coverage"] = coverage;
  json reports = json::array();
  for (const auto& r : result.reports) reports.push_back(deviation_report_json(game, r));
  out["deviations"] = reports;
  return out;
}

template <class R>
json dominance_json(const DominanceVerdict<R>& verdict, const std::vector<R>& u_sigma,
                    const std::vector<R>& u_tau, const std::vector<std::string>& players) {
  json out;
  out["relation"] = dominance_name(verdict.relation);
  out["strict"] = verdict.strict;
  json a = json::array(), b = json::array();
  for (const auto& v : u_sigma) a.push_back(value_str(v));
  for (const auto& v : u_tau) b.push_back(value_str(v));
  out["u_left"] = a;
  out["u_right"] = b;
  if (verdict.worse_player) out["worse_player"] = players[*verdict.worse_player];
  if (!verdict.witness_subset.empty()) {
    json w = json::array();
    for (int i : verdict.witness_subset) w.push_back(players[i]);
    out["witness_subset"] = w;
  }
  return out;
}

template <class R>
json chain_report_json(const Game<R>& base, const WelfareChainReport<R>& report) {
  json out;
  json coalition = json::array();
  for (int i : report.coalition) coalition.push_back(base.players[i]);
  out["coalition"] = coalition;
  json members = json::array();
  for (const auto& row : report.members) {
    json entry;
    entry["player"] = base.players[row.player];
    entry["base_utility"] = value_str(row.base_utility);
    entry["bet_gain"] = value_str(row.bet_gain);
    entry["bet_loss"] = value_str(row.bet_loss);
    entry["total"] = value_str(row.total);
    entry["sigma_utility"] = value_str(row.sigma_utility);
    members.push_back(entry);
  }
  out["members"] = members;
  json links = json::array();
  for (const auto& link : report.links) {
    json entry;
    entry["name"] = link.name;
    entry["actual"] = value_str(link.actual);
    entry["bound"] = value_str(link.bound);
    entry["slack"] = value_str(link.slack);
    links.push_back(entry);
  }
  out["links"] = links;
  out["aggregate_total"] = value_str(report.aggregate_total);
  out["aggregate_sigma"] = value_str(report.aggregate_sigma);
  out["all_nonnegative_slack"] = report.all_nonnegative();
  return out;
}

// Per-player size table with the closed forms and the stated cap; the exact
// action-bet count exceeds the cap, which is flagged, not hidden.
template <class R>
json sizes_json(const Extension<R>& ext) {
  json out = json::array();
  const auto c = ext.spec.construction;
  for (int i = 0; i < ext.num_players(); ++i) {
    json entry;
    entry["player"] = ext.base.players[i];
    entry["base_actions"] = ext.base.num_actions(i);
    entry["extended_actions"] = ext.ext_actions[i].size();
    std::size_t closed = 0;
    if (c == Construction::action_bets || c == Construction::independent_action_bets) {
      std::size_t sum = 0;
      for (int j = 0; j < ext.num_players(); ++j)
        sum += static_cast<std::size_t>(ext.base.num_actions(j));
      closed = static_cast<std::size_t>(ext.base.num_actions(i)) * (1 + sum);
      entry["stated_bound"] = ext.theorem_size_bound(i);
      entry["exceeds_stated_bound"] = ext.ext_actions[i].size() > ext.theorem_size_bound(i);
    } else if (c == Construction::profile_bets) {
      closed = static_cast<std::size_t>(ext.base.num_actions(i)) + ext.base.action_space.size();
    } else {
      std::size_t bets = 0;
      for (int j = 0; j < ext.num_players(); ++j)
        if (j != i) bets += ext.spec.set_menus[j].size();
      closed = static_cast<std::size_t>(ext.base.num_actions(i)) * (1 + bets);
    }
    entry["closed_form"] = closed;
    out.push_back(entry);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Human rendering. Everything printed here is read back out of the machine
// document, so the two renderings cannot drift apart.

namespace detail {

inline void render_lines(const json& node, const std::string& indent, std::ostream& os) {
  if (node.is_object()) {
    for (const auto& [key, value] : node.items()) {
      if (value.is_object() || value.is_array()) {
        os << indent << key << ":\n";
        render_lines(value, indent + "  ", os);
      } else {
        os << indent << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
           << "\n";
      }
    }
  } else if (node.is_array()) {
    for (std::size_t k = 0; k < node.size(); ++k) {
      const json& value = node[k];
      if (value.is_object() || value.is_array()) {
        os << indent << "- [" << k << "]\n";
        render_lines(value, indent + "  ", os);
      } else {
        os << indent << "- "
           << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
      }
    }
  }
}

}  // namespace detail

inline std::string render_report(const json& report) {
  std::ostringstream os;
  os << "== " << report.value("command", "report") << " ==\n";
  detail::render_lines(report, "", os);
  return os.str();
}

}  // namespace betgames::io

#endif  // BETGAMES_IO_HPP
