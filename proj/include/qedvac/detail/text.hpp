#ifndef QEDVAC_DETAIL_TEXT_HPP
#define QEDVAC_DETAIL_TEXT_HPP

#include <string>

namespace qedvac {
namespace detail {

inline std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos)
        return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace detail
}  // namespace qedvac

#endif  // QEDVAC_DETAIL_TEXT_HPP
