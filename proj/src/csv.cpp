#include "arpeak/csv.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace arpeak {
namespace {

[[noreturn]] void fail(const std::filesystem::path& path, int line, const std::string& what) {
    std::ostringstream os;
    os << path.string() << ":" << line << ": " << what;
    throw ParseError(os.str());
}

std::string strip(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
        ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
        --e;
    return s.substr(b, e - b);
}

} // namespace

TimeSeries Dataset::to_series(std::string origin) const {
    TimeSeries x;
    x.origin = std::move(origin);
    x.values.reserve(records.size());
    for (const DatasetRecord& r : records)
        x.values.push_back(r.value);
    return x;
}

Dataset read_label_value_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path.string());

    Dataset ds;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (lineno == 1)
            continue; // header
        if (strip(line).empty())
            continue;
        const std::size_t comma = line.find(',');
        if (comma == std::string::npos)
            fail(path, lineno, "expected two comma-separated columns");
        if (line.find(',', comma + 1) != std::string::npos)
            fail(path, lineno, "expected exactly two columns");

        DatasetRecord rec;
        rec.time_label = strip(line.substr(0, comma));
        const std::string value = strip(line.substr(comma + 1));
        if (rec.time_label.empty() || value.empty())
            fail(path, lineno, "empty field");
        const char* first = value.data();
        const char* last = value.data() + value.size();
        auto [end, ec] = std::from_chars(first, last, rec.value);
        if (ec != std::errc{} || end != last)
            fail(path, lineno, "cannot parse value '" + value + "'");
        if (!std::isfinite(rec.value))
            fail(path, lineno, "non-finite value");
        ds.records.push_back(std::move(rec));
    }
    if (lineno == 0)
        throw ParseError(path.string() + ": empty file (missing header)");
    return ds;
}

} // namespace arpeak
