#include "qcbt/event_io.hpp"

#include <array>
#include <cstdio>
#include <cstring>
#include <memory>

namespace qcbt::io {

namespace {

struct FileCloser {
    void operator()(std::FILE* f) const {
        if (f)
            std::fclose(f);
    }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

inline void put_u16(uint8_t* p, uint16_t v) {
    p[0] = static_cast<uint8_t>(v);
    p[1] = static_cast<uint8_t>(v >> 8);
}
inline void put_u32(uint8_t* p, uint32_t v) {
    for (int i = 0; i < 4; ++i)
        p[i] = static_cast<uint8_t>(v >> (8 * i));
}
inline void put_u64(uint8_t* p, uint64_t v) {
    for (int i = 0; i < 8; ++i)
        p[i] = static_cast<uint8_t>(v >> (8 * i));
}
inline uint16_t get_u16(const uint8_t* p) {
    return static_cast<uint16_t>(p[0] | (p[1] << 8));
}
inline uint64_t get_u64(const uint8_t* p) {
    uint64_t v = 0;
    for (int i = 7; i >= 0; --i)
        v = (v << 8) | p[i];
    return v;
}

constexpr size_t kHeaderSize = 16;
constexpr size_t kRecordSize = 16;

} // namespace

void write_events(std::span<const PhotonEvent> events, const std::string& path,
                  uint16_t camera_id) {
    FilePtr f(std::fopen(path.c_str(), "wb"));
    if (!f)
        throw std::runtime_error("write_events: cannot open " + path);

    std::array<uint8_t, kHeaderSize> header{};
    std::memcpy(header.data(), kMagic, 8);
    put_u16(header.data() + 8, kFormatVersion);
    put_u16(header.data() + 10, camera_id);
    put_u32(header.data() + 12, 0);
    if (std::fwrite(header.data(), 1, kHeaderSize, f.get()) != kHeaderSize)
        throw std::runtime_error("write_events: header write failed for " + path);

    std::array<uint8_t, kRecordSize> rec{};
    for (const PhotonEvent& ev : events) {
        put_u64(rec.data(), ev.t_ns);
        put_u16(rec.data() + 8, ev.px);
        put_u16(rec.data() + 10, ev.py);
        rec[12] = static_cast<uint8_t>(ev.plane);
        rec[13] = static_cast<uint8_t>(ev.arm);
        put_u16(rec.data() + 14, 0);
        if (std::fwrite(rec.data(), 1, kRecordSize, f.get()) != kRecordSize)
            throw std::runtime_error("write_events: record write failed for " + path);
    }
}

std::vector<PhotonEvent> read_events(const std::string& path) {
    FilePtr f(std::fopen(path.c_str(), "rb"));
    if (!f)
        throw std::runtime_error("read_events: cannot open " + path);

    std::array<uint8_t, kHeaderSize> header;
    if (std::fread(header.data(), 1, kHeaderSize, f.get()) != kHeaderSize)
        throw ParseError("read_events: truncated header", 0);
    if (std::memcmp(header.data(), kMagic, 8) != 0)
        throw ParseError("read_events: bad magic", 0);
    if (get_u16(header.data() + 8) != kFormatVersion)
        throw ParseError("read_events: unsupported version", 8);

    std::vector<PhotonEvent> events;
    std::array<uint8_t, kRecordSize> rec;
    uint64_t offset = kHeaderSize;
    for (;;) {
        const size_t got = std::fread(rec.data(), 1, kRecordSize, f.get());
        if (got == 0)
            break;
        if (got != kRecordSize)
            throw ParseError("read_events: truncated record", offset);
        PhotonEvent ev;
        ev.t_ns = get_u64(rec.data());
        ev.px = get_u16(rec.data() + 8);
        ev.py = get_u16(rec.data() + 10);
        if (rec[12] > 1)
            throw ParseError("read_events: invalid plane code", offset + 12);
        if (rec[13] > 2)
            throw ParseError("read_events: invalid arm code", offset + 13);
        ev.plane = static_cast<Plane>(rec[12]);
        ev.arm = static_cast<Arm>(rec[13]);
        ev.truth_tag = kTruthNone;
        events.push_back(ev);
        offset += kRecordSize;
    }
    return events;
}

void write_events_csv(std::span<const PhotonEvent> events, const std::string& path) {
    FilePtr f(std::fopen(path.c_str(), "wb"));
    if (!f)
        throw std::runtime_error("write_events_csv: cannot open " + path);
    std::fputs("t_ns,px,py,plane,arm\n", f.get());
    for (const PhotonEvent& ev : events)
        std::fprintf(f.get(), "%llu,%u,%u,%u,%u\n", static_cast<unsigned long long>(ev.t_ns),
                     ev.px, ev.py, static_cast<unsigned>(ev.plane), static_cast<unsigned>(ev.arm));
}

} // namespace qcbt::io
