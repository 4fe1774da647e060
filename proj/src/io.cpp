#include "xifam/io.hpp"

#include <fstream>
#include <sstream>

namespace xifam::io {

namespace {

const json& require(const json& j, const char* field) {
  if (!j.is_object()) throw InputError("top-level value must be a JSON object");
  auto it = j.find(field);
  if (it == j.end()) throw InputError("missing field '" + std::string(field) + "'");
  return *it;
}

long long require_int(const json& j, const char* field) {
  const json& v = require(j, field);
  if (!v.is_number_integer()) throw InputError("field '" + std::string(field) + "' must be an integer");
  return v.get<long long>();
}

Family parse_sets(int n, const json& v, const std::string& field) {
  if (!v.is_array()) throw InputError("field '" + field + "' must be an array of element lists");
  std::vector<Mask> masks;
  masks.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const json& set = v[i];
    const std::string where = field + "[" + std::to_string(i) + "]";
    if (!set.is_array()) throw InputError("field '" + where + "' must be an array of elements");
    Mask m = 0;
    for (std::size_t e = 0; e < set.size(); ++e) {
      const std::string at = where + "[" + std::to_string(e) + "]";
      if (!set[e].is_number_integer()) throw InputError("field '" + at + "' must be an integer");
      const long long x = set[e].get<long long>();
      if (x < 1 || x > n) {
        throw InputError("field '" + at + "': element " + std::to_string(x) + " outside [1, " +
                         std::to_string(n) + "]");
      }
      m |= Mask{1} << (x - 1);
    }
    masks.push_back(m);
  }
  return Family::from_masks(n, std::move(masks));
}

int parse_n(const json& j) {
  const long long n = require_int(j, "n");
  if (n < 1 || n > kMaxGroundSize) {
    throw InputError("field 'n': " + std::to_string(n) + " outside [1, " +
                     std::to_string(kMaxGroundSize) + "]");
  }
  return static_cast<int>(n);
}

}  // namespace

json sets_to_json(const Family& f) {
  json out = json::array();
  for (Mask m : f) out.push_back(elements_of(m));
  return out;
}

json family_to_json(const Family& f) { return json{{"n", f.n()}, {"sets", sets_to_json(f)}}; }

Family family_from_json(const json& j) {
  const int n = parse_n(j);
  return parse_sets(n, require(j, "sets"), "sets");
}

json pair_to_json(const PairInstance& p) {
  return json{{"n", p.n()},
              {"c", p.frac.c()},
              {"d", p.frac.d()},
              {"A", sets_to_json(p.a)},
              {"B", sets_to_json(p.b)}};
}

PairInstance pair_from_json(const json& j, bool* reduced) {
  const int n = parse_n(j);
  const long long c = require_int(j, "c");
  const long long d = require_int(j, "d");
  if (d < 1) throw InputError("field 'd' must be positive");
  if (c < 0 || c > d) throw InputError("fields 'c'/'d' must satisfy 0 <= c <= d");
  const Frac frac = Frac::reduced(c, d);
  if (reduced != nullptr) *reduced = (frac.c() != c || frac.d() != d);
  return PairInstance(frac, parse_sets(n, require(j, "A"), "A"), parse_sets(n, require(j, "B"), "B"));
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("malformed JSON in '" + path + "': " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
  if (!out) throw InputError("failed writing '" + path + "'");
}

}  // namespace xifam::io
