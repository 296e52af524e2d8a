#include "tagtrends/fetch.hpp"

#include "tagtrends/common.hpp"
#include "tagtrends/sha256.hpp"

#include <httplib.h>

#include <filesystem>
#include <fstream>

namespace tagtrends {

namespace fs = std::filesystem;

namespace {

// scheme://host[:port]/path -> (base, path)
std::pair<std::string, std::string> split_url(const std::string& url) {
    auto scheme_end = url.find("://");
    if (scheme_end == std::string::npos)
        throw InputError("fetch_remote: url without scheme: " + url);
    auto path_start = url.find('/', scheme_end + 3);
    if (path_start == std::string::npos)
        return {url, "/"};
    return {url.substr(0, path_start), url.substr(path_start)};
}

} // namespace

std::string fetch_remote(const std::string& url, const std::string& cache_dir) {
    auto [base, path] = split_url(url);
    httplib::Client client(base);
    client.set_connection_timeout(10);
    client.set_read_timeout(30);

    auto res = client.Get(path);
    if (!res)
        throw FetchRetryableError("fetch_remote: transport failure for " + url + ": " +
                                  httplib::to_string(res.error()));
    if (res->status < 200 || res->status >= 300)
        throw FetchFatalError(res->status, "fetch_remote: HTTP " +
                                               std::to_string(res->status) + " for " + url);

    fs::create_directories(cache_dir);
    const std::string hash = sha256_hex(res->body);
    const fs::path target = fs::path(cache_dir) / ("dump-" + hash + ".bin");
    if (fs::exists(target))
        return target.string(); // cache hit; entries are immutable

    // write via temp + rename so a crashed run never leaves a partial entry
    const fs::path tmp = target.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary);
        out.write(res->body.data(), static_cast<std::streamsize>(res->body.size()));
    }
    fs::rename(tmp, target);
    return target.string();
}

} // namespace tagtrends
