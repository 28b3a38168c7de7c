#include "divmod/jobspec.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "divmod/errors.hpp"
#include "json_detail.hpp"

namespace divmod {

namespace {

using nlohmann::json;

JobSpec job_from_json(const json& j, const std::string& source,
                      const std::string& order_override) {
    JobSpec job;
    job.ring = detail::ring_from_json(j.at("ring"), order_override);
    bool has_embedded = j.contains("module");
    bool has_presented = j.contains("presented");
    if (has_embedded == has_presented)
        throw ParseError("exactly one of 'module' and 'presented' is required", 0);
    if (has_embedded)
        job.embedded.emplace(detail::embedded_matrix_from_json(j.at("module"), job.ring),
                             j.value("name", source));
    else {
        const json& p = j.at("presented");
        std::size_t n = p.at("generators").get<std::size_t>();
        job.presented.emplace(job.ring,
                              n,
                              detail::rows_from_json(p.at("relations"), job.ring, n));
    }
    if (j.contains("reduction"))
        job.reduction = j.at("reduction").get<std::vector<std::size_t>>();
    job.command = j.value("command", "");
    if (j.contains("options")) {
        job.seed = j["options"].value("seed", std::uint64_t{0});
        job.rmax = j["options"].value("rmax", std::size_t{5});
    }
    return job;
}

}  // namespace

JobSpec parse_jobspec(const std::string& json_text, const std::string& source_name,
                      const std::string& order_override) {
    try {
        json j = json::parse(json_text);
        return job_from_json(j, source_name, order_override);
    } catch (const json::parse_error& ex) {
        throw ParseError(source_name + ": " + ex.what(), ex.byte);
    } catch (const json::exception& ex) {
        throw ParseError(source_name + ": " + ex.what(), 0);
    } catch (const ParseError& ex) {
        throw ParseError(source_name + ": " + ex.message(), ex.position());
    }
}

JobSpec load_jobspec(const std::string& path, const std::string& order_override) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read input file '" + path + "'", 0);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_jobspec(buf.str(), path, order_override);
}

}  // namespace divmod
