#include "catcenter/report.hpp"

#include <sstream>
#include <stdexcept>

namespace catcenter {

bool Report::ok() const {
    for (const auto& l : laws_)
        if (!l.pass) return false;
    return true;
}

bool Report::law_passed(const std::string& name) const {
    const LawResult* l = find(name);
    return l && l->pass;
}

const LawResult* Report::find(const std::string& name) const {
    for (const auto& l : laws_)
        if (l.law == name) return &l;
    return nullptr;
}

LawResult& Report::begin(const std::string& law) {
    laws_.push_back(LawResult{law, true, 0, {}});
    return laws_.back();
}

void Report::count(std::int64_t n) {
    if (laws_.empty()) throw std::logic_error("Report::count before begin");
    laws_.back().checked += n;
}

void Report::fail(const std::string& witness) {
    if (laws_.empty()) throw std::logic_error("Report::fail before begin");
    LawResult& l = laws_.back();
    l.pass = false;
    if (l.witnesses.size() < kMaxWitnesses) l.witnesses.push_back(witness);
}

void Report::require(bool pass, const std::string& witness) {
    count();
    if (!pass) fail(witness);
}

void Report::merge(const Report& other) {
    for (const auto& l : other.laws_) {
        laws_.push_back(l);
        if (!other.subject_.empty() && other.subject_ != subject_)
            laws_.back().law = other.subject_ + "." + l.law;
    }
}

std::string Report::summary() const {
    std::ostringstream os;
    for (const auto& l : laws_) {
        os << (l.pass ? "PASS " : "FAIL ") << l.law << " (" << l.checked << " checked)";
        if (!l.pass) {
            os << "  witness: " << (l.witnesses.empty() ? "?" : l.witnesses.front());
            if (l.witnesses.size() > 1) os << " (+" << l.witnesses.size() - 1 << " more)";
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace catcenter
