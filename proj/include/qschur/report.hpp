#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qschur {

struct Mismatch {
	std::string key;
	std::string lhs;
	std::string rhs;

	bool operator==(const Mismatch&) const = default;
};

/* Outcome of one identity check: what was checked, on which region, and
 * the first mismatching coefficient when it failed. */
struct VerificationReport {
	std::string check;
	std::map<std::string, std::string> params;
	std::string box;
	std::string sound_region;
	bool pass = true;
	std::optional<Mismatch> mismatch;
	std::vector<std::string> notes;

	void param(const std::string& key, std::string value)
	{
		params[key] = std::move(value);
	}

	void fail(std::string key, std::string lhs, std::string rhs)
	{
		if (pass) {
			pass = false;
			mismatch = Mismatch{std::move(key), std::move(lhs), std::move(rhs)};
		}
	}

	bool operator==(const VerificationReport&) const = default;
};

std::string to_json_text(const VerificationReport& r);
VerificationReport report_from_json_text(const std::string& text);

/* one-line "[PASS]/[FAIL] name (params)" rendering for the CLI */
std::string render_text(const VerificationReport& r);

} // namespace qschur
