#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "khecke/render.hpp"
#include "khecke/workspace.hpp"

namespace khecke {

// Golden files: KHECKE_TABLES_DIR if set, else the in-repo tables/ directory.
std::filesystem::path tables_dir();
const std::vector<std::string>& table_names();  // k, g, coproduct, G, grass, sl2
Json load_golden(const std::string& which);

// Recomputes a table in the golden row layout. Without n, covers every n the
// golden file has; with n, the same bounds (or small defaults) at that n only.
Json regenerate_table(Workspace& ws, const std::string& which, std::optional<int> n = std::nullopt);

struct TableDiff {
  std::string which;
  std::size_t rows = 0;
  std::vector<std::string> mismatches;
  bool ok() const { return mismatches.empty(); }
};
// Rows are compared by element, so reduced words differing by braid moves agree.
// With n, only the golden rows at that n (sl2 ignores n).
TableDiff diff_table(Workspace& ws, const std::string& which, std::optional<int> n = std::nullopt);

std::string table_text(const Json& table);
std::string table_latex(const Json& table);

}  // namespace khecke
