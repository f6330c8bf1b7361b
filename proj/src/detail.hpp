#ifndef GAUT_SRC_DETAIL_HPP
#define GAUT_SRC_DETAIL_HPP

#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace gaut::detail {

inline std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

inline std::vector<std::string> split_ws(std::string_view s) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
        if (j > i) out.push_back(std::string(s.substr(i, j - i)));
        i = j;
    }
    return out;
}

// Throw gaut::Error / gaut::ParseError when a name uses characters outside
// the format's charset.  Defined in alphabet.cpp.
void check_name(std::string_view name, const char* what);
void check_name_parse(std::size_t line, std::string_view name, const char* what);

// Hands out names that are unique within one constructed automaton: the
// base name itself when free, otherwise base.1, base.2, ...
class NameAllocator {
public:
    void reserve(const std::string& name) { used_.insert(name); }

    std::string claim(const std::string& base) {
        if (used_.insert(base).second) return base;
        for (int k = 1;; ++k) {
            std::string cand = base + "." + std::to_string(k);
            if (used_.insert(cand).second) return cand;
        }
    }

private:
    std::set<std::string> used_;
};

}  // namespace gaut::detail

#endif
