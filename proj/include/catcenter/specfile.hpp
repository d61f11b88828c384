#pragma once

#include <map>
#include <memory>

#include "catcenter/bilax.hpp"
#include "catcenter/suite.hpp"

namespace catcenter {

/// Parse error with file/line provenance.
struct SpecError : std::runtime_error {
    SpecError(const std::string& file, int line, const std::string& what)
        : std::runtime_error(file + ":" + std::to_string(line) + ": " + what) {}
};

struct BilaxEntry {
    std::shared_ptr<TableTwoCat> domain;
    std::shared_ptr<TwoYbo> domain_ybo;
    std::shared_ptr<TwoYbo> codomain_ybo;
    BilaxFunctor f;
};

struct Functor2Entry {
    std::shared_ptr<TableFunctor2> f;
};

struct Transformation2Entry {
    std::string from, to;  // functor2 names
    Transformation2 t;
};

/// Named registry of parsed structures. Storage is pointer-stable so
/// cross-references stay valid for the workspace lifetime.
struct Workspace {
    std::map<std::string, std::unique_ptr<FinCategory>> categories;
    std::map<std::string, std::unique_ptr<MonCat>> moncats;
    std::map<std::string, std::string> moncat_base;  // moncat -> category name
    std::map<std::string, std::vector<std::vector<int>>> moncat_braidings;
    std::map<std::string, std::unique_ptr<BimoduleCat>> regular_bimodules;
    std::map<std::string, std::unique_ptr<MatTwoCat>> matcats;
    std::map<std::string, std::unique_ptr<LaxMonFunctor>> monfunctors;
    std::map<std::string, std::unique_ptr<Bimonad>> bimonads;
    std::map<std::string, std::string> bimonad_backend;  // bimonad -> matcat name
    std::map<std::string, std::unique_ptr<YdModule>> ydmodules;
    std::map<std::string, std::string> yd_over;  // ydmodule -> bimonad name
    std::map<std::string, std::unique_ptr<TableTwoCat>> twocats;
    std::map<std::string, BilaxEntry> bilaxen;
    std::map<std::string, Functor2Entry> functor2s;
    std::map<std::string, Transformation2Entry> transformation2s;
    std::map<std::string, std::string> provenance;  // name -> file:line

    bool has(const std::string& name) const;
    void note(const std::string& name, const std::string& file, int line);
};

/// Parse one spec file into the workspace; throws SpecError with the first
/// diagnostic. Names must be fresh across the whole workspace.
void parse_spec_file(const std::string& path, Workspace& ws);
void parse_spec_text(const std::string& text, const std::string& filename, Workspace& ws);

std::string serialize_category(const FinCategory& c, const std::string& name);
std::string serialize_moncat(const MonCat& m, const std::string& name,
                             const std::string& base_name);
std::string serialize_workspace(const Workspace& ws);

/// Bundled instances, written as spec files for acceptance runs.
std::map<std::string, std::string> seed_suite_files();

}  // namespace catcenter
