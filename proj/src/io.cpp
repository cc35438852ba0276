#include "orderdim/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace orderdim {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

json parse_text(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::exception& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
}

void expect_format(const json& j, const char* format) {
  if (!j.is_object()) bad("document must be a JSON object");
  if (!j.contains("format") || j["format"] != format) bad(std::string("expected format \"") + format + "\"");
  if (!j.contains("format_version") || j["format_version"] != kFormatVersion) {
    bad("unsupported format_version (expected " + std::to_string(kFormatVersion) + ")");
  }
}

// Reads a field, turning JSON type errors into ParseError.
template <class T>
T field(const json& j, const char* key) {
  if (!j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    bad(std::string("field \"") + key + "\": " + e.what());
  }
}

template <class T>
T field_or(const json& j, const char* key, T fallback) {
  return j.contains(key) ? field<T>(j, key) : fallback;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json names(const Poset& P, const std::vector<std::size_t>& xs) {
  json out = json::array();
  for (std::size_t x : xs) out.push_back(P.label(x));
  return out;
}

ElementSet indices(const Poset& P, const std::vector<std::string>& xs) {
  ElementSet out;
  for (const auto& s : xs) out.push_back(P.index_of(s));
  return out;
}

const char* tag_name(LevelTag::Kind k) {
  switch (k) {
    case LevelTag::Kind::plain: return "plain";
    case LevelTag::Kind::f_copy: return "f";
    case LevelTag::Kind::g_copy: return "g";
  }
  return "?";
}

json poset_json(const PosetDocument& doc) {
  const Poset& P = doc.poset;
  json j;
  j["format"] = "poset";
  j["format_version"] = kFormatVersion;
  j["elements"] = P.labels();
  json rel = json::array();
  for (const auto& [x, y] : P.cover_pairs()) rel.push_back({P.label(x), P.label(y)});
  j["relation"] = std::move(rel);
  if (!doc.chains.empty()) {
    json chains = json::array();
    for (const auto& c : doc.chains) chains.push_back({{"name", c.name}, {"elements", names(P, c.elements)}});
    j["chains"] = std::move(chains);
  }
  if (doc.marked_point) j["marked_point"] = P.label(*doc.marked_point);
  if (doc.levels) {
    json meta = json::array();
    for (const auto& t : doc.levels->meta) {
      json m{{"kind", tag_name(t.kind)}};
      if (t.kind != LevelTag::Kind::plain) m["witness"] = t.witness;
      meta.push_back(std::move(m));
    }
    j["levels"] = {{"level", doc.levels->level}, {"meta", std::move(meta)}};
  }
  return j;
}

PosetDocument poset_from(const json& j) {
  expect_format(j, "poset");
  auto labels = field<std::vector<std::string>>(j, "elements");
  auto rel = field<std::vector<std::pair<std::string, std::string>>>(j, "relation");
  PosetDocument doc;
  doc.poset = build_poset(std::move(labels), rel);
  const Poset& P = doc.poset;
  if (j.contains("chains")) {
    if (!j["chains"].is_array()) bad("\"chains\" must be a list");
    for (const auto& c : j["chains"]) {
      NamedChain chain{field<std::string>(c, "name"),
                       normalize_subset(P, indices(P, field<std::vector<std::string>>(c, "elements")))};
      if (!is_chain(P, chain.elements)) throw Error(ErrorCode::NotAChain, "chain " + chain.name + " is not a chain");
      doc.chains.push_back(std::move(chain));
    }
  }
  if (j.contains("marked_point")) doc.marked_point = P.index_of(field<std::string>(j, "marked_point"));
  if (j.contains("levels")) {
    const json& lv = j["levels"];
    LevelData data;
    data.level = field<std::vector<std::size_t>>(lv, "level");
    if (data.level.size() != P.size()) bad("\"levels.level\" must have one entry per element");
    if (!lv.contains("meta") || !lv["meta"].is_array()) bad("missing field \"levels.meta\"");
    for (const auto& m : lv["meta"]) {
      const auto kind = field<std::string>(m, "kind");
      LevelTag t;
      if (kind == "plain") t.kind = LevelTag::Kind::plain;
      else if (kind == "f") t.kind = LevelTag::Kind::f_copy;
      else if (kind == "g") t.kind = LevelTag::Kind::g_copy;
      else bad("unknown level kind \"" + kind + "\"");
      if (t.kind != LevelTag::Kind::plain) t.witness = field<std::size_t>(m, "witness");
      data.meta.push_back(t);
    }
    for (std::size_t l : data.level) {
      if (l >= data.meta.size()) bad("level index outside \"levels.meta\"");
    }
    doc.levels = std::move(data);
  }
  return doc;
}

}  // namespace

const NamedChain& PosetDocument::chain(std::string_view name) const {
  for (const auto& c : chains) {
    if (c.name == name) return c;
  }
  throw Error(ErrorCode::UnknownLabel, "no chain named " + std::string(name));
}

ChainSet PosetDocument::all_chains() const {
  ChainSet out;
  for (const auto& c : chains) out.push_back(c.elements);
  return out;
}

SeparatorDocument separator_document(std::vector<SeparatorInstance> instances) {
  SeparatorDocument doc;
  for (const auto& inst : instances) {
    std::vector<std::string> n;
    for (std::size_t x = 0; x < inst.size(); ++x) n.push_back(std::to_string(x));
    doc.names.push_back(std::move(n));
  }
  doc.instances = std::move(instances);
  return doc;
}

PosetDocument poset_document(Poset P) {
  PosetDocument doc;
  doc.poset = std::move(P);
  return doc;
}

PosetDocument leveled_document(const LeveledPoset& lp) {
  PosetDocument doc = poset_document(lp.poset);
  doc.levels = LevelData{lp.level, lp.meta};
  return doc;
}

LeveledPoset leveled_view(const PosetDocument& doc) {
  if (!doc.levels) bad("poset document has no level data");
  LeveledPoset lp;
  lp.poset = doc.poset;
  lp.level = doc.levels->level;
  lp.meta = doc.levels->meta;
  for (std::size_t m = 0; m < lp.meta.size(); ++m) {
    lp.xs.push_back(doc.poset.index_of("x:" + std::to_string(m)));
    lp.ys.push_back(doc.poset.index_of("y:" + std::to_string(m)));
  }
  return lp;
}

std::string dump_poset(const PosetDocument& doc) { return dump(poset_json(doc)); }

std::string dump_realizer(const RealizerDocument& doc) {
  json j;
  j["format"] = "realizer";
  j["format_version"] = kFormatVersion;
  j["poset"] = poset_json(doc.poset);
  json exts = json::array();
  for (const auto& e : doc.realizer.exts) exts.push_back(names(doc.poset.poset, e.order()));
  j["extensions"] = std::move(exts);
  return dump(j);
}

std::string dump_separators(const SeparatorDocument& doc) {
  json j;
  j["format"] = "separator-instances";
  j["format_version"] = kFormatVersion;
  json insts = json::array();
  for (std::size_t i = 0; i < doc.instances.size(); ++i) {
    const auto& inst = doc.instances[i];
    const auto& n = doc.names[i];
    auto named = [&](const std::vector<std::size_t>& xs) {
      json out = json::array();
      for (std::size_t x : xs) out.push_back(n[x]);
      return out;
    };
    insts.push_back({{"elements", n},
                     {"order", named(inst.order.order())},
                     {"lower", named(inst.lower)},
                     {"upper", named(inst.upper)}});
  }
  j["instances"] = std::move(insts);
  return dump(j);
}

std::string dump_diagonal_config(const DiagonalConfig& cfg) {
  json j;
  j["format"] = "diagonal-config";
  j["format_version"] = kFormatVersion;
  j["k"] = cfg.k;
  j["stages"] = cfg.stages;
  json progs = json::array();
  for (std::size_t e = 0; e < cfg.programs.size(); ++e) {
    const ProgramSpec& p = cfg.programs[e];
    json q;
    q["order"] = cfg.assignment[e];
    q["kind"] = cfg.copies[e] ? std::string("copy_minimal") : to_string(p.kind);
    q["delay"] = p.delay;
    if (!cfg.copies[e] && p.kind == ProgramSpec::Kind::table) {
      json t = json::array();
      for (const auto& [x, v] : p.table) t.push_back({x, v});
      q["table"] = std::move(t);
      q["default"] = p.fallback;
    }
    if (p.kind == ProgramSpec::Kind::threshold) q["cutoff"] = p.cutoff;
    progs.push_back(std::move(q));
  }
  j["programs"] = std::move(progs);
  return dump(j);
}

PosetDocument parse_poset(std::string_view text) { return poset_from(parse_text(text)); }

RealizerDocument parse_realizer(std::string_view text, const std::filesystem::path& base) {
  const json j = parse_text(text);
  expect_format(j, "realizer");
  RealizerDocument doc;
  if (j.contains("poset")) {
    doc.poset = poset_from(j["poset"]);
  } else if (j.contains("poset_file")) {
    std::filesystem::path ref = field<std::string>(j, "poset_file");
    doc.poset = load_poset(ref.is_absolute() ? ref : base / ref);
  } else {
    bad("realizer needs \"poset\" or \"poset_file\"");
  }
  const Poset& P = doc.poset.poset;
  for (const auto& seq : field<std::vector<std::vector<std::string>>>(j, "extensions")) {
    if (seq.size() != P.size()) {
      throw Error(ErrorCode::SizeMismatch, "extension lists " + std::to_string(seq.size()) +
                                               " elements, poset has " + std::to_string(P.size()));
    }
    doc.realizer.exts.emplace_back(indices(P, seq));
  }
  return doc;
}

SeparatorDocument parse_separators(std::string_view text) {
  const json j = parse_text(text);
  expect_format(j, "separator-instances");
  if (!j.contains("instances") || !j["instances"].is_array()) bad("missing field \"instances\"");
  SeparatorDocument doc;
  for (const auto& ij : j["instances"]) {
    auto order = field<std::vector<std::string>>(ij, "order");
    auto elems = field_or<std::vector<std::string>>(ij, "elements", order);
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < elems.size(); ++i) {
      if (!index.emplace(elems[i], i).second) throw Error(ErrorCode::DuplicateLabel, "duplicate element " + elems[i]);
    }
    auto lookup = [&](const std::vector<std::string>& xs) {
      ElementSet out;
      for (const auto& s : xs) {
        auto it = index.find(s);
        if (it == index.end()) throw Error(ErrorCode::UnknownLabel, "unknown element " + s);
        out.push_back(it->second);
      }
      return out;
    };
    if (order.size() != elems.size()) {
      throw Error(ErrorCode::SizeMismatch, "order must list every element exactly once");
    }
    auto inst = make_instance(LinearExtension(lookup(order)), lookup(field_or<std::vector<std::string>>(ij, "lower", {})),
                              lookup(field_or<std::vector<std::string>>(ij, "upper", {})));
    doc.names.push_back(std::move(elems));
    doc.instances.push_back(std::move(inst));
  }
  return doc;
}

DiagonalConfig parse_diagonal_config(std::string_view text) {
  const json j = parse_text(text);
  expect_format(j, "diagonal-config");
  DiagonalConfig cfg;
  cfg.k = field<std::size_t>(j, "k");
  cfg.stages = field<std::size_t>(j, "stages");
  if (!j.contains("programs") || !j["programs"].is_array()) bad("missing field \"programs\"");
  for (const auto& q : j["programs"]) {
    ProgramSpec p;
    const auto kind = field<std::string>(q, "kind");
    const bool copy = kind == "copy_minimal";
    p.kind = copy ? ProgramSpec::Kind::never : program_kind(kind);
    p.delay = field_or<std::size_t>(q, "delay", 0);
    if (p.kind == ProgramSpec::Kind::table) {
      for (const auto& [x, v] : field_or<std::vector<std::pair<std::size_t, int>>>(q, "table", {})) {
        if (v != 0 && v != 1) bad("table values must be 0 or 1");
        p.table[x] = v;
      }
      p.fallback = field_or<int>(q, "default", 0);
      if (p.fallback != 0 && p.fallback != 1) bad("table default must be 0 or 1");
    }
    if (p.kind == ProgramSpec::Kind::threshold) p.cutoff = field<std::size_t>(q, "cutoff");
    cfg.assignment.push_back(field<std::size_t>(q, "order"));
    cfg.programs.push_back(std::move(p));
    cfg.copies.push_back(copy);
  }
  return cfg;
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text(const std::filesystem::path& path, std::string_view text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path.string());
  out << text;
}

PosetDocument load_poset(const std::filesystem::path& path) { return parse_poset(read_text(path)); }

RealizerDocument load_realizer(const std::filesystem::path& path) {
  return parse_realizer(read_text(path), path.parent_path());
}

SeparatorDocument load_separators(const std::filesystem::path& path) { return parse_separators(read_text(path)); }

DiagonalConfig load_diagonal_config(const std::filesystem::path& path) {
  return parse_diagonal_config(read_text(path));
}

Realizer translate_realizer(const Poset& source, const Realizer& R, const Poset& target) {
  if (source.size() != target.size()) {
    throw Error(ErrorCode::SizeMismatch, "realizer covers " + std::to_string(source.size()) +
                                             " elements, expected " + std::to_string(target.size()));
  }
  std::vector<std::size_t> map(source.size());
  for (std::size_t x = 0; x < source.size(); ++x) map[x] = target.index_of(source.label(x));
  Realizer out;
  for (const auto& ext : R.exts) {
    std::vector<std::size_t> order;
    for (std::size_t x : ext.order()) order.push_back(map[x]);
    out.exts.emplace_back(std::move(order));
  }
  return out;
}

}  // namespace orderdim
