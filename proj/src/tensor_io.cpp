#include "kq/tensor_io.hpp"

#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "kq/errors.hpp"

namespace kq {

namespace {

constexpr char kMagic[4] = {'K', 'Q', 'T', '1'};

void put_u64_le(std::string& out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}

std::uint64_t get_u64_le(const unsigned char* p) {
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(p[i]) << (8 * i);
    return v;
}

std::uint32_t get_u32_le(const unsigned char* p) {
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(p[i]) << (8 * i);
    return v;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoFailure("cannot open '" + path + "' for reading");
    std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) throw IoFailure("read error on '" + path + "'");
    return bytes;
}

} // namespace

Tensor load_tensor(const std::string& path) {
    const std::string bytes = read_file(path);
    const auto* p = reinterpret_cast<const unsigned char*>(bytes.data());
    const std::size_t len = bytes.size();

    if (len < 4 || std::memcmp(p, kMagic, 4) != 0) {
        throw BadMagic("'" + path + "': bad magic at byte offset 0 (want KQT1)");
    }
    if (len < 7) throw TruncatedFile("'" + path + "': truncated header at byte offset " +
                                     std::to_string(len));
    const unsigned version = p[4];
    const unsigned dtype = p[5];
    const unsigned ndim = p[6];
    if (version != 1) throw Error("'" + path + "': unsupported version " + std::to_string(version));
    if (dtype != 0) throw Error("'" + path + "': unsupported dtype code " + std::to_string(dtype));

    std::size_t off = 7;
    if (len < off + 8ull * ndim) {
        throw TruncatedFile("'" + path + "': truncated dims at byte offset " + std::to_string(len));
    }
    Tensor t;
    t.name = std::filesystem::path(path).stem().string();
    std::uint64_t count = ndim == 0 ? 0 : 1;
    for (unsigned i = 0; i < ndim; ++i) {
        const std::uint64_t d = get_u64_le(p + off);
        off += 8;
        t.dims.push_back(d);
        count *= d;
    }
    if (len != off + 4ull * count) {
        throw TruncatedFile("'" + path + "': payload holds " + std::to_string((len - off) / 4) +
                            " floats from byte offset " + std::to_string(off) + ", header expects " +
                            std::to_string(count));
    }
    t.data.resize(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        const std::uint32_t u = get_u32_le(p + off + 4 * i);
        float f;
        std::memcpy(&f, &u, 4);
        if (!std::isfinite(f)) {
            throw NonFiniteData("'" + path + "': non-finite value at element index " +
                                std::to_string(i));
        }
        t.data[i] = f;
    }
    return t;
}

void save_tensor(const Tensor& t, const std::string& path) {
    t.validate();
    std::string out;
    out.reserve(16 + 8 * t.dims.size() + 4 * t.data.size());
    out.append(kMagic, 4);
    out.push_back(1); // version
    out.push_back(0); // dtype float32
    out.push_back(static_cast<char>(t.dims.size()));
    for (std::uint64_t d : t.dims) put_u64_le(out, d);
    for (float f : t.data) {
        std::uint32_t u;
        std::memcpy(&u, &f, 4);
        for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((u >> (8 * i)) & 0xFF));
    }
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw IoFailure("cannot open '" + path + "' for writing");
    os.write(out.data(), static_cast<std::streamsize>(out.size()));
    os.flush();
    if (!os) throw IoFailure("write error on '" + path + "'");
}

std::vector<ManifestEntry> load_manifest(const std::string& path) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(read_file(path));
    } catch (const nlohmann::json::exception& e) {
        throw Error("manifest '" + path + "': " + e.what());
    }
    if (!j.is_array()) throw Error("manifest '" + path + "': expected a JSON array");
    const auto base = std::filesystem::path(path).parent_path();
    std::vector<ManifestEntry> entries;
    for (const auto& item : j) {
        ManifestEntry e;
        e.name = item.at("name").get<std::string>();
        const auto file = std::filesystem::path(item.at("file").get<std::string>());
        e.file = file.is_absolute() ? file.string() : (base / file).string();
        if (item.contains("type")) {
            const auto ts = item["type"].get<std::string>();
            const auto t = parse_quant_type(ts);
            if (!t) throw Error("manifest '" + path + "': unknown quant type '" + ts + "'");
            e.type = *t;
        }
        entries.push_back(std::move(e));
    }
    return entries;
}

MixConfig load_mix_config(const std::string& path) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(read_file(path));
    } catch (const nlohmann::json::exception& e) {
        throw Error("mix config '" + path + "': " + e.what());
    }
    MixConfig mix;
    const auto def = j.at("default").get<std::string>();
    const auto t = parse_quant_type(def);
    if (!t) throw Error("mix config '" + path + "': unknown default type '" + def + "'");
    mix.default_type = *t;
    if (j.contains("rules")) {
        for (const auto& r : j["rules"]) {
            const auto ts = r.at("type").get<std::string>();
            const auto rt = parse_quant_type(ts);
            if (!rt) throw Error("mix config '" + path + "': unknown rule type '" + ts + "'");
            mix.rules.push_back({r.at("pattern").get<std::string>(), *rt});
        }
    }
    return mix;
}

} // namespace kq
