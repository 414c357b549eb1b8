#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fae::ingest {

// Classic pcap container, metadata only. pcapng is rejected.

struct PcapPacketMeta {
    int64_t index = 0;       // 1-based record index
    uint32_t ts_sec = 0;
    uint32_t ts_frac = 0;    // micro- or nanoseconds depending on the magic
    uint32_t captured_len = 0;
    uint32_t original_len = 0;
};

struct PcapInfo {
    bool big_endian = false;
    bool nanosecond = false;
    uint16_t version_major = 0;
    uint16_t version_minor = 0;
    uint32_t snaplen = 0;
    uint32_t link_type = 0;
};

struct PcapContents {
    PcapInfo info;
    std::vector<PcapPacketMeta> packets;
};

struct PcapPacket {
    uint32_t ts_sec = 0;
    uint32_t ts_frac = 0;
    std::vector<uint8_t> payload;
};

struct PcapWriteOptions {
    bool big_endian = false;
    bool nanosecond = false;
    uint32_t snaplen = 65535;
    uint32_t link_type = 1;  // LINKTYPE_ETHERNET
};

PcapContents read_pcap_meta(const std::string& path);

// Timestamps must be non-decreasing; every payload must fit the snaplen.
void write_pcap(const std::vector<PcapPacket>& packets, const std::string& path,
                const PcapWriteOptions& opts = {});

} // namespace fae::ingest
