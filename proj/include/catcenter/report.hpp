#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace catcenter {

/// Outcome of one law family. A failing law always carries at least one
/// concrete witness (the coordinates of a violated instance).
struct LawResult {
    std::string law;
    bool pass = true;
    std::int64_t checked = 0;
    std::vector<std::string> witnesses;
};

class Report {
public:
    explicit Report(std::string subject = {}) : subject_(std::move(subject)) {}

    const std::string& subject() const { return subject_; }
    const std::vector<LawResult>& laws() const { return laws_; }

    bool ok() const;
    bool law_passed(const std::string& name) const;
    const LawResult* find(const std::string& name) const;

    /// Begin a law family; subsequent fail() calls attach to it.
    LawResult& begin(const std::string& law);
    void count(std::int64_t n = 1);
    void fail(const std::string& witness);
    /// Convenience: count one instance, fail it when !pass.
    void require(bool pass, const std::string& witness);

    void merge(const Report& other);

    std::string summary() const;

private:
    static constexpr std::size_t kMaxWitnesses = 16;
    std::string subject_;
    std::vector<LawResult> laws_;
};

}  // namespace catcenter
