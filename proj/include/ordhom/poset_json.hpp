#pragma once

#include <filesystem>
#include <string>

#include "ordhom/poset.hpp"

namespace ordhom {

/// JSON poset document:
///   {"name": "...", "elements": ["a", "b", ...], "covers": [[i, j], ...]}
/// where [i, j] means element i is covered by element j (0-based).  "name" is
/// optional.  Loading closes the cover list reflexively and transitively and
/// rejects cycles with PosetError.
Poset poset_from_json(const std::string& text);
Poset load_poset(const std::filesystem::path& path);

/// Inverse of poset_from_json; covers are the transitive reduction.
std::string poset_to_json(const Poset& p, const std::string& name = "");

}  // namespace ordhom
