#pragma once

#include <array>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bicat/core.hpp"
#include "bicat/fractions.hpp"
#include "bicat/psfun.hpp"
#include "bicat/wclass.hpp"

namespace bicat {

// Malformed document; `path` points at the offending field (JSON pointer).
struct ParseError : Error {
    ParseError(std::string path, const std::string& msg)
        : Error(path.empty() ? msg : path + ": " + msg), path(std::move(path)) {}
    std::string path;
};

// Pseudofunctor block as written; resolved on demand because some kinds
// require materializing a fraction bicategory.
struct PsFunDecl {
    std::string name;
    std::string builtin;  // "", "identity" or "universal"
    std::string cls;      // class for "universal"
    std::string target;   // document reference, empty for the document itself
    std::string pointer;  // location in the document
    std::vector<std::pair<std::string, std::string>> f0, f1, f2, sigma;
    std::vector<std::array<std::string, 3>> psi;
};

struct Document {
    std::string name;
    std::filesystem::path dir;  // for resolving relative references; empty when embedded
    BicatPtr bicat;
    std::map<std::string, std::vector<OneId>> classes;
    std::vector<PsFunDecl> psfuns;
};

Document parse_document(const std::string& text, std::string name = {});

// Presentation text for a bicategory (and optional named classes); parses back
// to identical tables.
std::string export_document(const FinBicat& b, const std::map<std::string, std::vector<OneId>>& classes = {});

// Named class lookup: declared classes first, then the computed ones
// "ids", "all", "min", "equiv", and "<name>_sat" for any resolvable name.
WClass resolve_class(const Document& doc, const std::string& name);

const std::vector<std::pair<std::string, std::string>>& embedded_fixtures();

struct ResolvedPsFun {
    PsFun fun;
    std::shared_ptr<const FractionBicat> fractions;  // set for universal pseudofunctors
    std::string source_class;                        // default W_A suggested by the declaration
    const Document* target_doc = nullptr;            // null when the target is a materialized localization

    // Named class of the target: resolved in the target document when there
    // is one, otherwise only the computed names are available.
    [[nodiscard]] WClass target_class(const std::string& name) const;
};

// Loads documents from disk or, failing that, from the embedded fixtures.
class Workspace {
public:
    explicit Workspace(SearchOptions opt = {}) : opt_(opt) {}

    const Document& load(const std::string& ref, const std::filesystem::path& relative_to = {});
    ResolvedPsFun psfun(const Document& doc, const std::string& name);

private:
    SearchOptions opt_;
    std::map<std::string, std::unique_ptr<Document>> docs_;
};

}  // namespace bicat
