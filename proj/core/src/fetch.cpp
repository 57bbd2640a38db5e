#include <curl/curl.h>
#include <openssl/evp.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "mantra/formats.hpp"

namespace mantra {

namespace {

size_t write_to_file(char* ptr, size_t size, size_t nmemb, void* userdata) {
    auto* out = static_cast<std::ofstream*>(userdata);
    out->write(ptr, static_cast<std::streamsize>(size * nmemb));
    return size * nmemb;
}

}  // namespace

std::vector<ManifestEntry> read_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open manifest " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::parse_error& e) {
        throw MalformedJsonError(e.what());
    }

    // Shape: { "<version>": [ {"url":..., "sha256":..., "filename":...}, ... ] }
    std::vector<ManifestEntry> entries;
    if (!doc.is_object()) throw MalformedJsonError("manifest is not an object");
    for (const auto& [version, files] : doc.items()) {
        if (!files.is_array())
            throw MalformedJsonError("manifest entry for " + version +
                                     " is not an array");
        for (const auto& f : files) {
            ManifestEntry e;
            e.version = version;
            e.url = f.at("url").get<std::string>();
            e.sha256 = f.at("sha256").get<std::string>();
            e.filename = f.value("filename",
                                 e.url.substr(e.url.find_last_of('/') + 1));
            entries.push_back(std::move(e));
        }
    }
    return entries;
}

std::string sha256_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);

    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
    std::vector<char> buf(1 << 16);
    while (in) {
        in.read(buf.data(), static_cast<std::streamsize>(buf.size()));
        EVP_DigestUpdate(ctx, buf.data(), static_cast<size_t>(in.gcount()));
    }
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_DigestFinal_ex(ctx, digest, &len);
    EVP_MD_CTX_free(ctx);

    std::string hex;
    char byte[3];
    for (unsigned int i = 0; i < len; ++i) {
        std::snprintf(byte, sizeof byte, "%02x", digest[i]);
        hex += byte;
    }
    return hex;
}

std::string fetch_archive(const ManifestEntry& entry,
                          const std::string& dest_dir) {
    namespace fs = std::filesystem;
    fs::create_directories(dest_dir);
    const std::string dest = (fs::path(dest_dir) / entry.filename).string();

    // A file already present with the right checksum is a cache hit.
    if (fs::exists(dest) && sha256_file(dest) == entry.sha256) return dest;

    const std::string partial = dest + ".part";
    {
        std::ofstream out(partial, std::ios::binary);
        if (!out) throw IoError("cannot write " + partial);

        CURL* curl = curl_easy_init();
        if (!curl) throw IoError("curl initialization failed");
        curl_easy_setopt(curl, CURLOPT_URL, entry.url.c_str());
        curl_easy_setopt(curl, CURLOPT_FOLLOWLOCATION, 1L);
        curl_easy_setopt(curl, CURLOPT_WRITEFUNCTION, write_to_file);
        curl_easy_setopt(curl, CURLOPT_WRITEDATA, &out);
        curl_easy_setopt(curl, CURLOPT_FAILONERROR, 1L);
        CURLcode rc = curl_easy_perform(curl);
        curl_easy_cleanup(curl);
        if (rc != CURLE_OK) {
            std::error_code ignore;
            fs::remove(partial, ignore);
            throw IoError("download failed for " + entry.url + ": " +
                          curl_easy_strerror(rc));
        }
    }

    const std::string actual = sha256_file(partial);
    if (actual != entry.sha256) {
        std::error_code ignore;
        fs::remove(partial, ignore);
        throw IoError("checksum mismatch for " + entry.filename + ": expected " +
                      entry.sha256 + ", got " + actual);
    }
    fs::rename(partial, dest);
    return dest;
}

}  // namespace mantra
