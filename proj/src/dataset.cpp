#include "codemine/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <map>
#include <numeric>

#include "codemine/errors.hpp"
#include "codemine/rng.hpp"
#include "codemine/text.hpp"

namespace codemine {

namespace {

// Canonical ARFF number: integral values print as integers, the rest as the
// shortest round-trip decimal. Keeps rewrites byte-identical.
std::string format_number(double v) {
    if (std::isfinite(v) && v == std::floor(v) && std::abs(v) < 1e15)
        return std::to_string(static_cast<long long>(v));
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

std::string quote_class_id(const std::string& id) {
    std::string out = "'";
    for (char c : id) {
        if (c == '\\' || c == '\'') out.push_back('\\');
        out.push_back(c);
    }
    out.push_back('\'');
    return out;
}

struct LineReader {
    std::string_view text;
    std::size_t pos = 0;
    int line_no = 0;

    bool next(std::string_view& line) {
        if (pos >= text.size()) return false;
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        line = text.substr(pos, eol - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        pos = eol + 1;
        ++line_no;
        return true;
    }
};

double parse_number(std::string_view token, int line_no) {
    token = trim(token);
    if (token.empty())
        throw FormatError("empty numeric field", line_no);
    std::string buf(token);
    char* end = nullptr;
    double v = std::strtod(buf.c_str(), &end);
    if (end != buf.c_str() + buf.size())
        throw FormatError("bad numeric value \"" + buf + "\"", line_no);
    return v;
}

} // namespace

std::string JoinLog::text() const {
    std::string out;
    for (const auto& line : dropped) {
        out += line;
        out += '\n';
    }
    return out;
}

Dataset join_rows(std::span<const MetricsRow> metric_rows, std::span<const ClassFix> fixes,
                  JoinLog* log) {
    std::map<std::string, const MetricsRow*> metrics_by_key;
    for (const MetricsRow& row : metric_rows) {
        std::string key = row.project_id + ":" + row.class_id;
        if (!metrics_by_key.emplace(key, &row).second)
            throw DuplicateKey("duplicate class key in metric rows: " + key);
    }
    std::map<std::string, long> fixes_by_key;
    for (const ClassFix& fix : fixes) {
        std::string key = fix.project_id + ":" + fix.class_id;
        if (!fixes_by_key.emplace(key, fix.ncfix).second)
            throw DuplicateKey("duplicate class key in ncfix rows: " + key);
    }

    Dataset ds;
    ds.metric_names.assign(kMetricNames.begin(), kMetricNames.end());
    for (const auto& [key, row] : metrics_by_key) {
        auto fix = fixes_by_key.find(key);
        if (fix == fixes_by_key.end()) {
            if (log) log->dropped.push_back(key + "\tdropped:ncfix");
            continue;
        }
        Dataset::Row out;
        out.class_id = key;
        auto values = row->metrics.as_row();
        out.values.assign(values.begin(), values.end());
        out.fixing_revisions = static_cast<double>(fix->second);
        ds.rows.push_back(std::move(out));
    }
    for (const auto& [key, count] : fixes_by_key) {
        if (!metrics_by_key.count(key) && log)
            log->dropped.push_back(key + "\tdropped:metrics");
    }
    return ds;
}

std::string write_arff_string(const Dataset& ds) {
    std::string out;
    out += "@RELATION " + ds.relation_name + "\n";
    out += "@ATTRIBUTE classID string\n";
    for (const auto& name : ds.metric_names)
        out += "@ATTRIBUTE " + name + " NUMERIC\n";
    out += "@ATTRIBUTE fixingRevisions NUMERIC\n";
    out += "@DATA\n";
    for (const Dataset::Row& row : ds.rows) {
        out += quote_class_id(row.class_id);
        for (double v : row.values) {
            out += ',';
            out += format_number(v);
        }
        out += ',';
        out += format_number(row.fixing_revisions);
        out += '\n';
    }
    return out;
}

void write_arff(const Dataset& ds, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw IoError("cannot write " + path.string());
    std::string text = write_arff_string(ds);
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out)
        throw IoError("short write to " + path.string());
}

Dataset read_arff_string(std::string_view text) {
    LineReader reader{text};
    Dataset ds;
    std::string_view line;

    auto next_meaningful = [&](std::string_view& out_line) {
        while (reader.next(out_line)) {
            std::string_view t = trim(out_line);
            if (t.empty() || t.front() == '%') continue;
            out_line = t;
            return true;
        }
        return false;
    };

    if (!next_meaningful(line))
        throw FormatError("missing @RELATION header", reader.line_no);
    {
        auto lower = to_lower(line);
        if (lower.rfind("@relation ", 0) != 0)
            throw FormatError("expected @RELATION", reader.line_no);
        ds.relation_name = std::string(trim(line.substr(10)));
    }

    bool saw_class_id = false;
    bool saw_data = false;
    std::vector<std::string> numeric_names;
    while (next_meaningful(line)) {
        std::string lower = to_lower(line);
        if (lower == "@data") {
            saw_data = true;
            break;
        }
        if (lower.rfind("@attribute ", 0) != 0)
            throw FormatError("expected @ATTRIBUTE or @DATA", reader.line_no);
        auto rest = trim(line.substr(11));
        std::size_t space = rest.find_first_of(" \t");
        if (space == std::string_view::npos)
            throw FormatError("attribute needs a name and a type", reader.line_no);
        std::string name(rest.substr(0, space));
        std::string type = to_lower(trim(rest.substr(space + 1)));
        if (!saw_class_id) {
            if (name != "classID" || type != "string")
                throw FormatError("first attribute must be `classID string`", reader.line_no);
            saw_class_id = true;
        } else if (type == "numeric") {
            numeric_names.push_back(std::move(name));
        } else {
            throw FormatError("unsupported attribute type: " + type, reader.line_no);
        }
    }
    if (!saw_data)
        throw FormatError("missing @DATA marker", reader.line_no);
    if (numeric_names.empty() || numeric_names.back() != "fixingRevisions")
        throw FormatError("last attribute must be fixingRevisions", reader.line_no);
    numeric_names.pop_back();
    ds.metric_names = std::move(numeric_names);

    while (reader.next(line)) {
        std::string_view t = trim(line);
        if (t.empty() || t.front() == '%') continue;

        Dataset::Row row;
        std::size_t i = 0;
        if (t.front() == '\'') {
            ++i;
            std::string id;
            bool closed = false;
            for (; i < t.size(); ++i) {
                char c = t[i];
                if (c == '\\' && i + 1 < t.size()) {
                    id.push_back(t[++i]);
                } else if (c == '\'') {
                    closed = true;
                    ++i;
                    break;
                } else {
                    id.push_back(c);
                }
            }
            if (!closed)
                throw FormatError("unterminated classID quote", reader.line_no);
            row.class_id = std::move(id);
            if (i >= t.size() || t[i] != ',')
                throw FormatError("expected ',' after classID", reader.line_no);
            ++i;
        } else {
            std::size_t comma = t.find(',');
            if (comma == std::string_view::npos)
                throw FormatError("row needs numeric fields", reader.line_no);
            row.class_id = std::string(trim(t.substr(0, comma)));
            i = comma + 1;
        }

        auto fields = split(t.substr(i), ',');
        if (fields.size() != ds.metric_names.size() + 1)
            throw FormatError("expected " + std::to_string(ds.metric_names.size() + 1) +
                                  " numeric fields, found " + std::to_string(fields.size()),
                              reader.line_no);
        for (std::size_t f = 0; f + 1 < fields.size(); ++f)
            row.values.push_back(parse_number(fields[f], reader.line_no));
        row.fixing_revisions = parse_number(fields.back(), reader.line_no);
        ds.rows.push_back(std::move(row));
    }
    return ds;
}

Dataset read_arff(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot read " + path.string());
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return read_arff_string(text);
}

std::pair<Dataset, Dataset> split_dataset(const Dataset& ds, double train_fraction,
                                          std::uint64_t seed) {
    if (!(train_fraction > 0.0 && train_fraction < 1.0))
        throw InvalidArgument("train fraction must be in (0,1)");
    if (ds.rows.size() < 2)
        throw InvalidArgument("cannot split a dataset with fewer than 2 rows");

    std::vector<std::size_t> order(ds.rows.size());
    std::iota(order.begin(), order.end(), 0);
    auto rng = make_engine(seed, fnv1a64("shuffle"));
    std::shuffle(order.begin(), order.end(), rng);

    std::size_t train_size =
        static_cast<std::size_t>(std::floor(static_cast<double>(ds.rows.size()) * train_fraction));

    Dataset train, test;
    train.relation_name = test.relation_name = ds.relation_name;
    train.metric_names = test.metric_names = ds.metric_names;
    for (std::size_t i = 0; i < order.size(); ++i)
        (i < train_size ? train : test).rows.push_back(ds.rows[order[i]]);
    return {std::move(train), std::move(test)};
}

} // namespace codemine
