#pragma once

#include <cstddef>
#include <string_view>

namespace lexmsa::detail {

/// Calls fn(line, 1-based line number) for every line that is not blank.
template <typename F>
void for_each_line(std::string_view doc, F&& fn)
{
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= doc.size()) {
        std::size_t nl = doc.find('\n', pos);
        std::string_view line = doc.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        ++line_no;
        if (line.find_first_not_of(" \t\r") != std::string_view::npos)
            fn(line, line_no);
        if (nl == std::string_view::npos)
            break;
        pos = nl + 1;
    }
}

} // namespace lexmsa::detail
