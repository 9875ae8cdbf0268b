#include "qschur/report.hpp"

#include <json.hpp>

#include <sstream>

namespace qschur {

using nlohmann::json;

std::string to_json_text(const VerificationReport& r)
{
	json j;
	j["schema"] = 1;
	j["check"] = r.check;
	json params = json::object();
	for (const auto& [k, v] : r.params) params[k] = v;
	j["params"] = params;
	j["box"] = r.box;
	j["sound_region"] = r.sound_region;
	j["status"] = r.pass ? "pass" : "fail";
	if (r.mismatch) {
		j["mismatch"] = {{"key", r.mismatch->key},
		                 {"lhs", r.mismatch->lhs},
		                 {"rhs", r.mismatch->rhs}};
	} else {
		j["mismatch"] = nullptr;
	}
	j["notes"] = r.notes;
	return j.dump(2);
}

VerificationReport report_from_json_text(const std::string& text)
{
	json j = json::parse(text);
	if (!j.contains("schema") || j["schema"].get<int>() != 1)
		throw std::runtime_error("unsupported report schema");
	VerificationReport r;
	r.check = j.at("check").get<std::string>();
	for (const auto& [k, v] : j.at("params").items())
		r.params[k] = v.get<std::string>();
	r.box = j.at("box").get<std::string>();
	r.sound_region = j.at("sound_region").get<std::string>();
	r.pass = j.at("status").get<std::string>() == "pass";
	if (!j.at("mismatch").is_null()) {
		r.mismatch = Mismatch{j["mismatch"].at("key").get<std::string>(),
		                      j["mismatch"].at("lhs").get<std::string>(),
		                      j["mismatch"].at("rhs").get<std::string>()};
	}
	for (const auto& n : j.at("notes")) r.notes.push_back(n.get<std::string>());
	return r;
}

std::string render_text(const VerificationReport& r)
{
	std::ostringstream os;
	os << (r.pass ? "[PASS] " : "[FAIL] ") << r.check;
	if (!r.params.empty()) {
		os << " (";
		bool first = true;
		for (const auto& [k, v] : r.params) {
			if (!first) os << ", ";
			os << k << '=' << v;
			first = false;
		}
		os << ')';
	}
	if (!r.sound_region.empty()) os << "  region: " << r.sound_region;
	if (r.mismatch) {
		os << "\n       first mismatch at " << r.mismatch->key << ": lhs="
		   << r.mismatch->lhs << " rhs=" << r.mismatch->rhs;
	}
	for (const auto& n : r.notes) os << "\n       note: " << n;
	return os.str();
}

} // namespace qschur
