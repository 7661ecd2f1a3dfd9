#include <snf/pipeline.hpp>

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace snf {

ParseError::ParseError(std::size_t line, const std::string & what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line)
{
}

namespace {

std::string header_line(const FilterSet & f)
{
    return "SNDS v1 n=" + std::to_string(f.n) + " d=" + std::to_string(f.depth) + " universe=" + f.universe.label() +
           " count=" + std::to_string(f.size());
}

std::string set_line(const OutputSet & s)
{
    std::string line = "S";
    const int n = s.channels();
    bool first = true;
    for (Word w : s) {
        line += first ? ' ' : ',';
        first = false;
        for (int i = 0; i < n; ++i)
            line += ((w >> i) & 1U) ? '1' : '0';
    }
    return line;
}

std::vector<std::string_view> split(std::string_view text, char sep)
{
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (;;) {
        const auto pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos - start));
        if (pos == std::string_view::npos)
            return parts;
        start = pos + 1;
    }
}

/// Plain decimal without sign or leading zeros.
std::optional<int> parse_uint(std::string_view s)
{
    if (s.empty() || (s.size() > 1 && s[0] == '0'))
        return std::nullopt;
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || v < 0)
        return std::nullopt;
    return v;
}

std::optional<int> keyed(std::string_view token, std::string_view key)
{
    if (token.substr(0, key.size()) != key)
        return std::nullopt;
    return parse_uint(token.substr(key.size()));
}

class Reader {
public:
    explicit Reader(std::istream & in) : in_(in) {}

    std::string next(const char * expecting)
    {
        std::string line;
        if (!std::getline(in_, line))
            throw ParseError(line_no_ + 1, std::string("unexpected end of file, expected ") + expecting);
        ++line_no_;
        return line;
    }

    bool at_end()
    {
        return in_.peek() == std::char_traits<char>::eof();
    }

    std::size_t line() const noexcept { return line_no_; }

private:
    std::istream & in_;
    std::size_t line_no_ = 0;
};

FilterSet parse_header(const std::string & line)
{
    const auto tokens = split(line, ' ');
    if (tokens.size() != 6 || tokens[0] != "SNDS" || tokens[1] != "v1")
        throw ParseError(1, "malformed header, expected 'SNDS v1 n=<n> d=<d> universe=<u> count=<r>'");
    FilterSet f;
    const auto n = keyed(tokens[2], "n=");
    const auto d = keyed(tokens[3], "d=");
    const auto count = keyed(tokens[5], "count=");
    if (!n || *n < 1 || *n > max_channels)
        throw ParseError(1, "header channel count missing or outside [1, 16]");
    if (!d || !count)
        throw ParseError(1, "malformed header depth or count");
    f.n = *n;
    f.depth = *d;
    f.data.n = *n;
    const auto universe = tokens[4];
    if (universe == "universe=full") {
        f.universe = InputUniverse::full();
    }
    else if (auto w = keyed(universe, "universe=omega:")) {
        if (*w > *n)
            throw ParseError(1, "restriction width exceeds channel count");
        f.universe = InputUniverse::restricted_to(*w);
    }
    else {
        throw ParseError(1, "unknown input universe '" + std::string(universe) + "'");
    }
    return f;
}

Network parse_network(std::string_view body, int n, std::size_t line)
{
    Network net(n);
    if (body == "-")
        return net;
    for (auto level_text : split(body, ';')) {
        std::vector<Comparator> comps;
        if (!level_text.empty()) {
            for (auto token : split(level_text, ' ')) {
                const auto dash = token.find('-');
                if (dash == std::string_view::npos)
                    throw ParseError(line, "comparator '" + std::string(token) + "' is not of the form i-j");
                const auto lo = parse_uint(token.substr(0, dash));
                const auto hi = parse_uint(token.substr(dash + 1));
                if (!lo || !hi)
                    throw ParseError(line, "comparator '" + std::string(token) + "' has a malformed channel");
                if (*lo < 1 || *hi > n)
                    throw ParseError(line, "comparator '" + std::string(token) + "' exceeds channel count " +
                                               std::to_string(n));
                comps.push_back({static_cast<std::uint8_t>(*lo), static_cast<std::uint8_t>(*hi)});
            }
        }
        try {
            Level level(n, comps);
            if (!std::equal(comps.begin(), comps.end(), level.comparators().begin(), level.comparators().end()))
                throw ParseError(line, "comparators within a level must be listed in ascending order");
            net.append(level);
        }
        catch (const UsageError & e) {
            throw ParseError(line, e.what());
        }
    }
    return net;
}

OutputSet parse_set(std::string_view body, int n, std::size_t line)
{
    std::vector<Word> words;
    if (!body.empty()) {
        for (auto token : split(body, ',')) {
            if (static_cast<int>(token.size()) != n)
                throw ParseError(line, "vector '" + std::string(token) + "' does not have " + std::to_string(n) +
                                           " channels");
            std::uint32_t w = 0;
            for (int i = 0; i < n; ++i) {
                if (token[i] == '1')
                    w |= std::uint32_t{1} << i;
                else if (token[i] != '0')
                    throw ParseError(line, "vector '" + std::string(token) + "' is not binary");
            }
            if (!words.empty() && w <= words.back())
                throw ParseError(line, "output set is not in strictly ascending canonical order");
            words.push_back(static_cast<Word>(w));
        }
    }
    return OutputSet::from_canonical(n, std::move(words));
}

} // namespace

std::string serialize(const FilterSet & filters)
{
    std::ostringstream out;
    save_dataset(out, filters);
    return out.str();
}

void save_dataset(std::ostream & out, const FilterSet & filters)
{
    out << header_line(filters) << '\n';
    for (const auto & rec : filters.data.records) {
        out << "N " << to_string(rec.network) << '\n';
        out << set_line(rec.outputs) << '\n';
    }
}

void save_dataset(const std::string & path, const FilterSet & filters)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open '" + path + "' for writing");
    save_dataset(out, filters);
    if (!out.flush())
        throw std::runtime_error("failed writing '" + path + "'");
}

FilterSet load_dataset(std::istream & in, bool check_outputs)
{
    Reader reader(in);
    const auto header = reader.next("header");
    auto filters = parse_header(header);
    const auto declared = keyed(split(header, ' ')[5], "count=").value();
    const auto inputs = check_outputs ? filters.universe.inputs(filters.n) : OutputSet(filters.n);

    for (int r = 0; r < declared; ++r) {
        const auto nline = reader.next("network line");
        if (nline.size() < 2 || nline.compare(0, 2, "N ") != 0)
            throw ParseError(reader.line(), "expected a network line starting with 'N '");
        auto net = parse_network(std::string_view(nline).substr(2), filters.n, reader.line());
        if (static_cast<int>(net.depth()) != filters.depth)
            throw ParseError(reader.line(), "network has " + std::to_string(net.depth()) + " levels, header says d=" +
                                                std::to_string(filters.depth));

        const auto sline = reader.next("output set line");
        std::string_view body;
        if (sline == "S")
            body = {};
        else if (sline.size() > 2 && sline.compare(0, 2, "S ") == 0)
            body = std::string_view(sline).substr(2);
        else
            throw ParseError(reader.line(), "expected an output set line starting with 'S '");
        auto set = parse_set(body, filters.n, reader.line());
        if (check_outputs && output_set(net, inputs) != set)
            throw ParseError(reader.line(), "output set does not match the network over universe=" +
                                                filters.universe.label());
        filters.data.records.push_back({std::move(net), std::move(set)});
    }
    if (!reader.at_end())
        throw ParseError(reader.line() + 1, "more records than count=" + std::to_string(declared));
    return filters;
}

FilterSet load_dataset(const std::string & path, bool check_outputs)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "'");
    return load_dataset(in, check_outputs);
}

} // namespace snf
