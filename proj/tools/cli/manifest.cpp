#include "manifest.hpp"

#include "semilinear/errors.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace cli {

using semilinear::Json;

std::string sha256_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw semilinear::InvalidParams("cannot read " + path.string());
    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
    char buffer[1 << 14];
    while (in.read(buffer, sizeof buffer) || in.gcount() > 0) {
        EVP_DigestUpdate(ctx, buffer, static_cast<std::size_t>(in.gcount()));
    }
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int length = 0;
    EVP_DigestFinal_ex(ctx, digest, &length);
    EVP_MD_CTX_free(ctx);
    std::ostringstream hex;
    for (unsigned int i = 0; i < length; ++i) {
        hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
    }
    return hex.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw semilinear::InvalidParams("cannot write " + path.string());
    out << text;
}

void write_json(const std::filesystem::path& path, const Json& doc) { write_text(path, doc.dump(2) + "\n"); }

Json read_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw semilinear::InvalidParams("cannot read " + path.string());
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw semilinear::InvalidParams(path.string() + ": " + e.what());
    }
}

void write_manifest(const std::filesystem::path& dir, const Manifest& m) {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::ostringstream stamp;
    stamp << std::put_time(std::gmtime(&now), "%Y-%m-%dT%H:%M:%SZ");
    Json doc{{"command", m.command},
             {"parameters", m.args},
             {"seed", m.seed},
             {"schedule", m.schedule},
             {"inputs", m.inputs.is_null() ? Json::object() : m.inputs},
             {"artifacts", m.artifacts},
             {"timestamp", stamp.str()}};
    write_json(dir / "manifest.json", doc);
}

Manifest read_manifest(const std::filesystem::path& path) {
    const Json doc = read_json(path);
    Manifest m;
    try {
        m.command = doc.at("command").get<std::string>();
        m.args = doc.at("parameters").get<std::vector<std::string>>();
        m.seed = doc.at("seed").get<std::uint64_t>();
        m.schedule = doc.value("schedule", Json());
        m.inputs = doc.value("inputs", Json::object());
        m.artifacts = doc.at("artifacts");
    } catch (const Json::exception& e) {
        throw semilinear::InvalidParams(path.string() + ": malformed manifest: " + e.what());
    }
    return m;
}

}  // namespace cli
