#ifndef XIFAM_IO_HPP
#define XIFAM_IO_HPP

#include <string>

#include <json.hpp>

#include "xifam/core.hpp"

namespace xifam::io {

using json = nlohmann::json;

// Element lists, 1-indexed; [] is the empty set.
json sets_to_json(const Family& f);

// {"n": 4, "sets": [[1,2],[3]]}
json family_to_json(const Family& f);
Family family_from_json(const json& j);

// {"n": 4, "c": 1, "d": 2, "A": [[1],[2]], "B": [[],[1,2]]}
json pair_to_json(const PairInstance& p);

// Throws InputError naming the offending field. When the stored fraction
// is not irreducible it is reduced and `reduced` (if given) is set.
PairInstance pair_from_json(const json& j, bool* reduced = nullptr);

// Key-sorted, two-space indented, newline-terminated.
std::string dump(const json& j);

json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace xifam::io

#endif  // XIFAM_IO_HPP
