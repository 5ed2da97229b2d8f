// Generated by data/regen.py from Unicode Scripts.txt (17.0.0). Do not edit.

use super::script::Script;

pub(crate) const SCRIPT_RANGES: &[(u32, u32, Script)] = &[
    (0x0000, 0x0040, Script::Common),
    (0x0041, 0x005A, Script::Latin),
    (0x005B, 0x0060, Script::Common),
    (0x0061, 0x007A, Script::Latin),
    (0x007B, 0x00A9, Script::Common),
    (0x00AA, 0x00AA, Script::Latin),
    (0x00AB, 0x00B9, Script::Common),
    (0x00BA, 0x00BA, Script::Latin),
    (0x00BB, 0x00BF, Script::Common),
    (0x00C0, 0x00D6, Script::Latin),
    (0x00D7, 0x00D7, Script::Common),
    (0x00D8, 0x00F6, Script::Latin),
    (0x00F7, 0x00F7, Script::Common),
    (0x00F8, 0x02B8, Script::Latin),
    (0x02B9, 0x02DF, Script::Common),
    (0x02E0, 0x02E4, Script::Latin),
    (0x02E5, 0x02E9, Script::Common),
    (0x02EC, 0x02FF, Script::Common),
    (0x0300, 0x036F, Script::Inherited),
    (0x0370, 0x0373, Script::Greek),
    (0x0374, 0x0374, Script::Common),
    (0x0375, 0x0377, Script::Greek),
    (0x037A, 0x037D, Script::Greek),
    (0x037E, 0x037E, Script::Common),
    (0x037F, 0x037F, Script::Greek),
    (0x0384, 0x0384, Script::Greek),
    (0x0385, 0x0385, Script::Common),
    (0x0386, 0x0386, Script::Greek),
    (0x0387, 0x0387, Script::Common),
    (0x0388, 0x038A, Script::Greek),
    (0x038C, 0x038C, Script::Greek),
    (0x038E, 0x03A1, Script::Greek),
    (0x03A3, 0x03E1, Script::Greek),
    (0x03F0, 0x03FF, Script::Greek),
    (0x0400, 0x0484, Script::Cyrillic),
    (0x0485, 0x0486, Script::Inherited),
    (0x0487, 0x052F, Script::Cyrillic),
    (0x0591, 0x05C7, Script::Hebrew),
    (0x05D0, 0x05EA, Script::Hebrew),
    (0x05EF, 0x05F4, Script::Hebrew),
    (0x0600, 0x0604, Script::Arabic),
    (0x0605, 0x0605, Script::Common),
    (0x0606, 0x060B, Script::Arabic),
    (0x060C, 0x060C, Script::Common),
    (0x060D, 0x061A, Script::Arabic),
    (0x061B, 0x061B, Script::Common),
    (0x061C, 0x061E, Script::Arabic),
    (0x061F, 0x061F, Script::Common),
    (0x0620, 0x063F, Script::Arabic),
    (0x0640, 0x0640, Script::Common),
    (0x0641, 0x064A, Script::Arabic),
    (0x064B, 0x0655, Script::Inherited),
    (0x0656, 0x066F, Script::Arabic),
    (0x0670, 0x0670, Script::Inherited),
    (0x0671, 0x06DC, Script::Arabic),
    (0x06DD, 0x06DD, Script::Common),
    (0x06DE, 0x06FF, Script::Arabic),
    (0x0750, 0x077F, Script::Arabic),
    (0x0870, 0x0891, Script::Arabic),
    (0x0897, 0x08E1, Script::Arabic),
    (0x08E2, 0x08E2, Script::Common),
    (0x08E3, 0x08FF, Script::Arabic),
    (0x0951, 0x0954, Script::Inherited),
    (0x0964, 0x0965, Script::Common),
    (0x0E3F, 0x0E3F, Script::Common),
    (0x0FD5, 0x0FD8, Script::Common),
    (0x10FB, 0x10FB, Script::Common),
    (0x16EB, 0x16ED, Script::Common),
    (0x1735, 0x1736, Script::Common),
    (0x1802, 0x1803, Script::Common),
    (0x1805, 0x1805, Script::Common),
    (0x1AB0, 0x1ADD, Script::Inherited),
    (0x1AE0, 0x1AEB, Script::Inherited),
    (0x1C80, 0x1C8A, Script::Cyrillic),
    (0x1CD0, 0x1CD2, Script::Inherited),
    (0x1CD3, 0x1CD3, Script::Common),
    (0x1CD4, 0x1CE0, Script::Inherited),
    (0x1CE1, 0x1CE1, Script::Common),
    (0x1CE2, 0x1CE8, Script::Inherited),
    (0x1CE9, 0x1CEC, Script::Common),
    (0x1CED, 0x1CED, Script::Inherited),
    (0x1CEE, 0x1CF3, Script::Common),
    (0x1CF4, 0x1CF4, Script::Inherited),
    (0x1CF5, 0x1CF7, Script::Common),
    (0x1CF8, 0x1CF9, Script::Inherited),
    (0x1CFA, 0x1CFA, Script::Common),
    (0x1D00, 0x1D25, Script::Latin),
    (0x1D26, 0x1D2A, Script::Greek),
    (0x1D2B, 0x1D2B, Script::Cyrillic),
    (0x1D2C, 0x1D5C, Script::Latin),
    (0x1D5D, 0x1D61, Script::Greek),
    (0x1D62, 0x1D65, Script::Latin),
    (0x1D66, 0x1D6A, Script::Greek),
    (0x1D6B, 0x1D77, Script::Latin),
    (0x1D78, 0x1D78, Script::Cyrillic),
    (0x1D79, 0x1DBE, Script::Latin),
    (0x1DBF, 0x1DBF, Script::Greek),
    (0x1DC0, 0x1DFF, Script::Inherited),
    (0x1E00, 0x1EFF, Script::Latin),
    (0x1F00, 0x1F15, Script::Greek),
    (0x1F18, 0x1F1D, Script::Greek),
    (0x1F20, 0x1F45, Script::Greek),
    (0x1F48, 0x1F4D, Script::Greek),
    (0x1F50, 0x1F57, Script::Greek),
    (0x1F59, 0x1F59, Script::Greek),
    (0x1F5B, 0x1F5B, Script::Greek),
    (0x1F5D, 0x1F5D, Script::Greek),
    (0x1F5F, 0x1F7D, Script::Greek),
    (0x1F80, 0x1FB4, Script::Greek),
    (0x1FB6, 0x1FC4, Script::Greek),
    (0x1FC6, 0x1FD3, Script::Greek),
    (0x1FD6, 0x1FDB, Script::Greek),
    (0x1FDD, 0x1FEF, Script::Greek),
    (0x1FF2, 0x1FF4, Script::Greek),
    (0x1FF6, 0x1FFE, Script::Greek),
    (0x2000, 0x200B, Script::Common),
    (0x200C, 0x200D, Script::Inherited),
    (0x200E, 0x2064, Script::Common),
    (0x2066, 0x2070, Script::Common),
    (0x2071, 0x2071, Script::Latin),
    (0x2074, 0x207E, Script::Common),
    (0x207F, 0x207F, Script::Latin),
    (0x2080, 0x208E, Script::Common),
    (0x2090, 0x209C, Script::Latin),
    (0x20A0, 0x20C1, Script::Common),
    (0x20D0, 0x20F0, Script::Inherited),
    (0x2100, 0x2125, Script::Common),
    (0x2126, 0x2126, Script::Greek),
    (0x2127, 0x2129, Script::Common),
    (0x212A, 0x212B, Script::Latin),
    (0x212C, 0x2131, Script::Common),
    (0x2132, 0x2132, Script::Latin),
    (0x2133, 0x214D, Script::Common),
    (0x214E, 0x214E, Script::Latin),
    (0x214F, 0x215F, Script::Common),
    (0x2160, 0x2188, Script::Latin),
    (0x2189, 0x218B, Script::Common),
    (0x2190, 0x2429, Script::Common),
    (0x2440, 0x244A, Script::Common),
    (0x2460, 0x27FF, Script::Common),
    (0x2900, 0x2B73, Script::Common),
    (0x2B76, 0x2BFF, Script::Common),
    (0x2C60, 0x2C7F, Script::Latin),
    (0x2DE0, 0x2DFF, Script::Cyrillic),
    (0x2E00, 0x2E5D, Script::Common),
    (0x2E80, 0x2E99, Script::Han),
    (0x2E9B, 0x2EF3, Script::Han),
    (0x2F00, 0x2FD5, Script::Han),
    (0x2FF0, 0x3004, Script::Common),
    (0x3005, 0x3005, Script::Han),
    (0x3006, 0x3006, Script::Common),
    (0x3007, 0x3007, Script::Han),
    (0x3008, 0x3020, Script::Common),
    (0x3021, 0x3029, Script::Han),
    (0x302A, 0x302D, Script::Inherited),
    (0x3030, 0x3037, Script::Common),
    (0x3038, 0x303B, Script::Han),
    (0x303C, 0x303F, Script::Common),
    (0x3099, 0x309A, Script::Inherited),
    (0x309B, 0x309C, Script::Common),
    (0x30A0, 0x30A0, Script::Common),
    (0x30FB, 0x30FC, Script::Common),
    (0x3190, 0x319F, Script::Common),
    (0x31C0, 0x31E5, Script::Common),
    (0x31EF, 0x31EF, Script::Common),
    (0x3220, 0x325F, Script::Common),
    (0x327F, 0x32CF, Script::Common),
    (0x32FF, 0x32FF, Script::Common),
    (0x3358, 0x33FF, Script::Common),
    (0x3400, 0x4DBF, Script::Han),
    (0x4DC0, 0x4DFF, Script::Common),
    (0x4E00, 0x9FFF, Script::Han),
    (0xA640, 0xA69F, Script::Cyrillic),
    (0xA700, 0xA721, Script::Common),
    (0xA722, 0xA787, Script::Latin),
    (0xA788, 0xA78A, Script::Common),
    (0xA78B, 0xA7DC, Script::Latin),
    (0xA7F1, 0xA7FF, Script::Latin),
    (0xA830, 0xA839, Script::Common),
    (0xA92E, 0xA92E, Script::Common),
    (0xA9CF, 0xA9CF, Script::Common),
    (0xAB30, 0xAB5A, Script::Latin),
    (0xAB5B, 0xAB5B, Script::Common),
    (0xAB5C, 0xAB64, Script::Latin),
    (0xAB65, 0xAB65, Script::Greek),
    (0xAB66, 0xAB69, Script::Latin),
    (0xAB6A, 0xAB6B, Script::Common),
    (0xF900, 0xFA6D, Script::Han),
    (0xFA70, 0xFAD9, Script::Han),
    (0xFB00, 0xFB06, Script::Latin),
    (0xFB1D, 0xFB36, Script::Hebrew),
    (0xFB38, 0xFB3C, Script::Hebrew),
    (0xFB3E, 0xFB3E, Script::Hebrew),
    (0xFB40, 0xFB41, Script::Hebrew),
    (0xFB43, 0xFB44, Script::Hebrew),
    (0xFB46, 0xFB4F, Script::Hebrew),
    (0xFB50, 0xFD3D, Script::Arabic),
    (0xFD3E, 0xFD3F, Script::Common),
    (0xFD40, 0xFDCF, Script::Arabic),
    (0xFDF0, 0xFDFF, Script::Arabic),
    (0xFE00, 0xFE0F, Script::Inherited),
    (0xFE10, 0xFE19, Script::Common),
    (0xFE20, 0xFE2D, Script::Inherited),
    (0xFE2E, 0xFE2F, Script::Cyrillic),
    (0xFE30, 0xFE52, Script::Common),
    (0xFE54, 0xFE66, Script::Common),
    (0xFE68, 0xFE6B, Script::Common),
    (0xFE70, 0xFE74, Script::Arabic),
    (0xFE76, 0xFEFC, Script::Arabic),
    (0xFEFF, 0xFEFF, Script::Common),
    (0xFF01, 0xFF20, Script::Common),
    (0xFF21, 0xFF3A, Script::Latin),
    (0xFF3B, 0xFF40, Script::Common),
    (0xFF41, 0xFF5A, Script::Latin),
    (0xFF5B, 0xFF65, Script::Common),
    (0xFF70, 0xFF70, Script::Common),
    (0xFF9E, 0xFF9F, Script::Common),
    (0xFFE0, 0xFFE6, Script::Common),
    (0xFFE8, 0xFFEE, Script::Common),
    (0xFFF9, 0xFFFD, Script::Common),
    (0x10100, 0x10102, Script::Common),
    (0x10107, 0x10133, Script::Common),
    (0x10137, 0x1013F, Script::Common),
    (0x10140, 0x1018E, Script::Greek),
    (0x10190, 0x1019C, Script::Common),
    (0x101A0, 0x101A0, Script::Greek),
    (0x101D0, 0x101FC, Script::Common),
    (0x101FD, 0x101FD, Script::Inherited),
    (0x102E0, 0x102E0, Script::Inherited),
    (0x102E1, 0x102FB, Script::Common),
    (0x10780, 0x10785, Script::Latin),
    (0x10787, 0x107B0, Script::Latin),
    (0x107B2, 0x107BA, Script::Latin),
    (0x10E60, 0x10E7E, Script::Arabic),
    (0x10EC2, 0x10EC7, Script::Arabic),
    (0x10ED0, 0x10ED8, Script::Arabic),
    (0x10EFA, 0x10EFF, Script::Arabic),
    (0x1133B, 0x1133B, Script::Inherited),
    (0x16FE2, 0x16FE3, Script::Han),
    (0x16FF0, 0x16FF6, Script::Han),
    (0x1BCA0, 0x1BCA3, Script::Common),
    (0x1CC00, 0x1CCFC, Script::Common),
    (0x1CD00, 0x1CEB3, Script::Common),
    (0x1CEBA, 0x1CED0, Script::Common),
    (0x1CEE0, 0x1CEF0, Script::Common),
    (0x1CF00, 0x1CF2D, Script::Inherited),
    (0x1CF30, 0x1CF46, Script::Inherited),
    (0x1CF50, 0x1CFC3, Script::Common),
    (0x1D000, 0x1D0F5, Script::Common),
    (0x1D100, 0x1D126, Script::Common),
    (0x1D129, 0x1D166, Script::Common),
    (0x1D167, 0x1D169, Script::Inherited),
    (0x1D16A, 0x1D17A, Script::Common),
    (0x1D17B, 0x1D182, Script::Inherited),
    (0x1D183, 0x1D184, Script::Common),
    (0x1D185, 0x1D18B, Script::Inherited),
    (0x1D18C, 0x1D1A9, Script::Common),
    (0x1D1AA, 0x1D1AD, Script::Inherited),
    (0x1D1AE, 0x1D1EA, Script::Common),
    (0x1D200, 0x1D245, Script::Greek),
    (0x1D2C0, 0x1D2D3, Script::Common),
    (0x1D2E0, 0x1D2F3, Script::Common),
    (0x1D300, 0x1D356, Script::Common),
    (0x1D360, 0x1D378, Script::Common),
    (0x1D400, 0x1D454, Script::Common),
    (0x1D456, 0x1D49C, Script::Common),
    (0x1D49E, 0x1D49F, Script::Common),
    (0x1D4A2, 0x1D4A2, Script::Common),
    (0x1D4A5, 0x1D4A6, Script::Common),
    (0x1D4A9, 0x1D4AC, Script::Common),
    (0x1D4AE, 0x1D4B9, Script::Common),
    (0x1D4BB, 0x1D4BB, Script::Common),
    (0x1D4BD, 0x1D4C3, Script::Common),
    (0x1D4C5, 0x1D505, Script::Common),
    (0x1D507, 0x1D50A, Script::Common),
    (0x1D50D, 0x1D514, Script::Common),
    (0x1D516, 0x1D51C, Script::Common),
    (0x1D51E, 0x1D539, Script::Common),
    (0x1D53B, 0x1D53E, Script::Common),
    (0x1D540, 0x1D544, Script::Common),
    (0x1D546, 0x1D546, Script::Common),
    (0x1D54A, 0x1D550, Script::Common),
    (0x1D552, 0x1D6A5, Script::Common),
    (0x1D6A8, 0x1D7CB, Script::Common),
    (0x1D7CE, 0x1D7FF, Script::Common),
    (0x1DF00, 0x1DF1E, Script::Latin),
    (0x1DF25, 0x1DF2A, Script::Latin),
    (0x1E030, 0x1E06D, Script::Cyrillic),
    (0x1E08F, 0x1E08F, Script::Cyrillic),
    (0x1EC71, 0x1ECB4, Script::Common),
    (0x1ED01, 0x1ED3D, Script::Common),
    (0x1EE00, 0x1EE03, Script::Arabic),
    (0x1EE05, 0x1EE1F, Script::Arabic),
    (0x1EE21, 0x1EE22, Script::Arabic),
    (0x1EE24, 0x1EE24, Script::Arabic),
    (0x1EE27, 0x1EE27, Script::Arabic),
    (0x1EE29, 0x1EE32, Script::Arabic),
    (0x1EE34, 0x1EE37, Script::Arabic),
    (0x1EE39, 0x1EE39, Script::Arabic),
    (0x1EE3B, 0x1EE3B, Script::Arabic),
    (0x1EE42, 0x1EE42, Script::Arabic),
    (0x1EE47, 0x1EE47, Script::Arabic),
    (0x1EE49, 0x1EE49, Script::Arabic),
    (0x1EE4B, 0x1EE4B, Script::Arabic),
    (0x1EE4D, 0x1EE4F, Script::Arabic),
    (0x1EE51, 0x1EE52, Script::Arabic),
    (0x1EE54, 0x1EE54, Script::Arabic),
    (0x1EE57, 0x1EE57, Script::Arabic),
    (0x1EE59, 0x1EE59, Script::Arabic),
    (0x1EE5B, 0x1EE5B, Script::Arabic),
    (0x1EE5D, 0x1EE5D, Script::Arabic),
    (0x1EE5F, 0x1EE5F, Script::Arabic),
    (0x1EE61, 0x1EE62, Script::Arabic),
    (0x1EE64, 0x1EE64, Script::Arabic),
    (0x1EE67, 0x1EE6A, Script::Arabic),
    (0x1EE6C, 0x1EE72, Script::Arabic),
    (0x1EE74, 0x1EE77, Script::Arabic),
    (0x1EE79, 0x1EE7C, Script::Arabic),
    (0x1EE7E, 0x1EE7E, Script::Arabic),
    (0x1EE80, 0x1EE89, Script::Arabic),
    (0x1EE8B, 0x1EE9B, Script::Arabic),
    (0x1EEA1, 0x1EEA3, Script::Arabic),
    (0x1EEA5, 0x1EEA9, Script::Arabic),
    (0x1EEAB, 0x1EEBB, Script::Arabic),
    (0x1EEF0, 0x1EEF1, Script::Arabic),
    (0x1F000, 0x1F02B, Script::Common),
    (0x1F030, 0x1F093, Script::Common),
    (0x1F0A0, 0x1F0AE, Script::Common),
    (0x1F0B1, 0x1F0BF, Script::Common),
    (0x1F0C1, 0x1F0CF, Script::Common),
    (0x1F0D1, 0x1F0F5, Script::Common),
    (0x1F100, 0x1F1AD, Script::Common),
    (0x1F1E6, 0x1F1FF, Script::Common),
    (0x1F201, 0x1F202, Script::Common),
    (0x1F210, 0x1F23B, Script::Common),
    (0x1F240, 0x1F248, Script::Common),
    (0x1F250, 0x1F251, Script::Common),
    (0x1F260, 0x1F265, Script::Common),
    (0x1F300, 0x1F6D8, Script::Common),
    (0x1F6DC, 0x1F6EC, Script::Common),
    (0x1F6F0, 0x1F6FC, Script::Common),
    (0x1F700, 0x1F7D9, Script::Common),
    (0x1F7E0, 0x1F7EB, Script::Common),
    (0x1F7F0, 0x1F7F0, Script::Common),
    (0x1F800, 0x1F80B, Script::Common),
    (0x1F810, 0x1F847, Script::Common),
    (0x1F850, 0x1F859, Script::Common),
    (0x1F860, 0x1F887, Script::Common),
    (0x1F890, 0x1F8AD, Script::Common),
    (0x1F8B0, 0x1F8BB, Script::Common),
    (0x1F8C0, 0x1F8C1, Script::Common),
    (0x1F8D0, 0x1F8D8, Script::Common),
    (0x1F900, 0x1FA57, Script::Common),
    (0x1FA60, 0x1FA6D, Script::Common),
    (0x1FA70, 0x1FA7C, Script::Common),
    (0x1FA80, 0x1FA8A, Script::Common),
    (0x1FA8E, 0x1FAC6, Script::Common),
    (0x1FAC8, 0x1FAC8, Script::Common),
    (0x1FACD, 0x1FADC, Script::Common),
    (0x1FADF, 0x1FAEA, Script::Common),
    (0x1FAEF, 0x1FAF8, Script::Common),
    (0x1FB00, 0x1FB92, Script::Common),
    (0x1FB94, 0x1FBFA, Script::Common),
    (0x20000, 0x2A6DF, Script::Han),
    (0x2A700, 0x2B81D, Script::Han),
    (0x2B820, 0x2CEAD, Script::Han),
    (0x2CEB0, 0x2EBE0, Script::Han),
    (0x2EBF0, 0x2EE5D, Script::Han),
    (0x2F800, 0x2FA1D, Script::Han),
    (0x30000, 0x3134A, Script::Han),
    (0x31350, 0x33479, Script::Han),
    (0xE0001, 0xE0001, Script::Common),
    (0xE0020, 0xE007F, Script::Common),
    (0xE0100, 0xE01EF, Script::Inherited),
];
