#include "snell/io.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

namespace snell {

using nlohmann::json;

namespace {

[[noreturn]] void malformed(const std::string& what) { fail(ErrorKind::MalformedJson, what); }

}  // namespace

PosetDocument poset_from_json(const json& j) {
  if (!j.is_object()) malformed("poset document must be an object");
  if (!j.contains("elements") || !j.at("elements").is_array())
    malformed("'elements' array required");
  if (!j.contains("covers") || !j.at("covers").is_array()) malformed("'covers' array required");

  std::vector<std::string> elements;
  for (const auto& e : j.at("elements")) {
    if (!e.is_string()) malformed("elements must be strings");
    elements.push_back(e.get<std::string>());
  }
  std::vector<std::pair<std::string, std::string>> covers;
  for (const auto& c : j.at("covers")) {
    if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string())
      malformed("covers must be [lower, upper] string pairs");
    covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
  }
  PosetDocument doc{Poset::from_covers(std::move(elements), covers), std::nullopt};

  if (j.contains("labels")) {
    if (!j.at("labels").is_object()) malformed("'labels' must be an object");
    EdgeLabeling lab(doc.poset);
    for (const auto& [key, value] : j.at("labels").items()) {
      if (!value.is_number_integer()) malformed("label values must be integers");
      // key is "<lower>|<upper>"; try every split in case names contain '|',
      // and count only the splits that name an actual cover
      int cover = -1;
      bool ambiguous = false;
      for (size_t cut = 0; cut < key.size(); ++cut) {
        if (key[cut] != '|') continue;
        auto lo = doc.poset.index_of(key.substr(0, cut));
        auto hi = doc.poset.index_of(key.substr(cut + 1));
        if (!lo || !hi) continue;
        int idx = doc.poset.cover_index(*lo, *hi);
        if (idx < 0) continue;
        if (cover >= 0 && idx != cover) ambiguous = true;
        cover = idx;
      }
      if (ambiguous) malformed("label key '" + key + "' is ambiguous");
      if (cover < 0)
        fail(ErrorKind::LabelOnNonCover, "label key '" + key + "' does not name a cover pair");
      lab.set_label(cover, value.get<int>());
    }
    doc.labeling = std::move(lab);
  }
  return doc;
}

json poset_to_json(const Poset& p, const EdgeLabeling* lab) {
  std::vector<std::string> elements = p.names();
  std::sort(elements.begin(), elements.end());

  std::vector<std::pair<std::string, std::string>> covers;
  covers.reserve(p.covers().size());
  for (auto [a, b] : p.covers()) covers.emplace_back(p.name(a), p.name(b));
  std::sort(covers.begin(), covers.end());

  json j;
  j["elements"] = elements;
  json jc = json::array();
  for (auto& [a, b] : covers) jc.push_back(json::array({a, b}));
  j["covers"] = jc;

  if (lab) {
    // json objects are stored sorted by key, which keeps the output canonical
    json jl = json::object();
    for (int e = 0; e < (int)p.covers().size(); ++e) {
      auto [a, b] = p.covers()[e];
      jl[p.name(a) + "|" + p.name(b)] = lab->label(e);
    }
    j["labels"] = jl;
  }
  return j;
}

ChainAction action_from_json(const json& j) {
  if (!j.is_object()) malformed("action document must be an object");
  if (!j.contains("poset")) malformed("'poset' required");
  json pj = j.at("poset");
  if (pj.is_string()) pj = read_json(pj.get<std::string>());
  PosetDocument doc = poset_from_json(pj);
  auto cert = grade(doc.poset);

  if (!j.contains("chains") || !j.at("chains").is_array()) malformed("'chains' array required");
  std::vector<Chain> chains;
  for (const auto& jc : j.at("chains")) {
    if (!jc.is_array()) malformed("chains must be arrays of element names");
    Chain c;
    for (const auto& e : jc) {
      if (!e.is_string()) malformed("chain entries must be element names");
      auto idx = doc.poset.index_of(e.get<std::string>());
      if (!idx) fail(ErrorKind::UnknownElement, "chain references '" + e.get<std::string>() + "'");
      c.push_back(*idx);
    }
    chains.push_back(std::move(c));
  }

  if (!j.contains("U") || !j.at("U").is_array()) malformed("'U' table required");
  std::vector<std::vector<int>> table;
  for (const auto& row : j.at("U")) {
    if (!row.is_array()) malformed("'U' rows must be arrays");
    std::vector<int> r;
    for (const auto& v : row) {
      if (!v.is_number_integer()) malformed("'U' entries must be integers");
      r.push_back(v.get<int>());
    }
    table.push_back(std::move(r));
  }
  return ChainAction(std::move(doc.poset), std::move(cert), std::move(chains), std::move(table));
}

json action_to_json(const ChainAction& a) {
  // canonical form: chains sorted by their name sequences, table remapped
  std::vector<std::vector<std::string>> named(a.num_chains());
  for (int c = 0; c < a.num_chains(); ++c)
    for (int v : a.chain(c)) named[c].push_back(a.poset().name(v));

  std::vector<int> order(a.num_chains());
  for (int i = 0; i < a.num_chains(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int x, int y) { return named[x] < named[y]; });
  std::vector<int> pos(a.num_chains());
  for (int i = 0; i < a.num_chains(); ++i) pos[order[i]] = i;

  json j;
  j["poset"] = poset_to_json(a.poset());
  json jc = json::array();
  for (int i = 0; i < a.num_chains(); ++i) jc.push_back(named[order[i]]);
  j["chains"] = jc;
  json ju = json::array();
  for (int i = 1; i < a.n(); ++i) {
    json row = json::array();
    for (int c = 0; c < a.num_chains(); ++c) row.push_back(pos[a.apply(i, order[c])]);
    ju.push_back(row);
  }
  j["U"] = ju;
  return j;
}

std::string read_stream_text(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json read_json(const std::string& path) {
  std::string text;
  if (path == "-") {
    text = read_stream_text(std::cin);
  } else {
    std::ifstream f(path);
    if (!f) fail(ErrorKind::MalformedJson, "cannot open '" + path + "'");
    text = read_stream_text(f);
  }
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(ErrorKind::MalformedJson, "invalid JSON in '" + path + "'");
  return j;
}

void write_json(const std::string& path, const json& j) {
  std::string text = j.dump(2);
  text += "\n";
  if (path == "-") {
    std::cout << text;
  } else {
    std::ofstream f(path);
    if (!f) fail(ErrorKind::MalformedJson, "cannot open '" + path + "' for writing");
    f << text;
  }
}

}  // namespace snell
