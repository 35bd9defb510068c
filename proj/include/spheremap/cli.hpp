#ifndef SPHEREMAP_CLI_HPP
#define SPHEREMAP_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "spheremap/json_io.hpp"

namespace spheremap::cli {

enum ExitCode : int { kOk = 0, kFalseVerdict = 1, kUsage = 2, kInternal = 3 };

/// Entry point of the spheremap tool. Results go to `out` (or --out), the
/// run manifest to `<out>.manifest.json` or to `err` when writing to stdout.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

struct ReportInput {
  std::string path;
  Json document;
  /// Sidecar manifest of the run that produced the document, if found.
  std::optional<Json> manifest;
};

/// Markdown summary of result documents, one section per input. Throws
/// std::invalid_argument for an empty list and ParseError for a document of
/// unknown type.
std::string render_report(const std::vector<ReportInput>& inputs);

/// "re" or "re:im".
CplxRat parse_cplx(const std::string& text);
/// Comma separated list of parse_cplx values.
std::vector<CplxRat> parse_cplx_list(const std::string& text);
/// Comma separated "t:T" pairs.
std::vector<FoldPair> parse_fold_list(const std::string& text);

}  // namespace spheremap::cli

#endif
