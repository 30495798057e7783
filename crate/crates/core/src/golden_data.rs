//! Count tables transcribed from the published tables.
//!
//! Each entry is `(mask, n_count, ab_count)`; bit `i - 1` of the mask is set iff
//! `α_i ∈ I`. Rows are listed in ascending mask order.

pub(crate) const G2: [(u16, u64, u64); 4] =
    [(0b00, 8, 4), (0b01, 3, 2), (0b10, 4, 3), (0b11, 1, 1)];

pub(crate) const F4: [(u16, u64, u64); 16] = [
    (0b0000, 105, 16),
    (0b0001, 24, 6),
    (0b0010, 35, 12),
    (0b0011, 10, 5),
    (0b0100, 32, 10),
    (0b0101, 8, 4),
    (0b0110, 14, 7),
    (0b0111, 4, 3),
    (0b1000, 49, 9),
    (0b1001, 12, 4),
    (0b1010, 14, 6),
    (0b1011, 5, 3),
    (0b1100, 10, 4),
    (0b1101, 3, 2),
    (0b1110, 3, 2),
    (0b1111, 1, 1),
];

pub(crate) const E6: [(u16, u64, u64); 64] = [
    (0b000000, 833, 64),
    (0b000001, 197, 21),
    (0b000010, 201, 40),
    (0b000011, 60, 16),
    (0b000100, 255, 40),
    (0b000101, 51, 10),
    (0b000110, 82, 24),
    (0b000111, 21, 8),
    (0b001000, 323, 41),
    (0b001001, 81, 16),
    (0b001010, 60, 22),
    (0b001011, 23, 11),
    (0b001100, 80, 22),
    (0b001101, 16, 6),
    (0b001110, 19, 10),
    (0b001111, 6, 4),
    (0b010000, 255, 40),
    (0b010001, 68, 16),
    (0b010010, 82, 24),
    (0b010011, 26, 11),
    (0b010100, 90, 24),
    (0b010101, 21, 8),
    (0b010110, 36, 15),
    (0b010111, 10, 6),
    (0b011000, 80, 22),
    (0b011001, 27, 11),
    (0b011010, 19, 10),
    (0b011011, 9, 6),
    (0b011100, 20, 10),
    (0b011101, 6, 4),
    (0b011110, 5, 4),
    (0b011111, 2, 2),
    (0b100000, 197, 21),
    (0b100001, 56, 8),
    (0b100010, 60, 16),
    (0b100011, 20, 7),
    (0b100100, 68, 16),
    (0b100101, 18, 5),
    (0b100110, 26, 11),
    (0b100111, 8, 4),
    (0b101000, 81, 16),
    (0b101001, 24, 6),
    (0b101010, 23, 11),
    (0b101011, 9, 5),
    (0b101100, 27, 11),
    (0b101101, 7, 3),
    (0b101110, 9, 6),
    (0b101111, 3, 2),
    (0b110000, 51, 10),
    (0b110001, 18, 5),
    (0b110010, 21, 8),
    (0b110011, 8, 4),
    (0b110100, 21, 8),
    (0b110101, 8, 4),
    (0b110110, 10, 6),
    (0b110111, 4, 3),
    (0b111000, 16, 6),
    (0b111001, 7, 3),
    (0b111010, 6, 4),
    (0b111011, 3, 2),
    (0b111100, 6, 4),
    (0b111101, 3, 2),
    (0b111110, 2, 2),
    (0b111111, 1, 1),
];

pub(crate) const E7: [(u16, u64, u64); 128] = [
    (0b0000000, 4160, 128),
    (0b0000001, 837, 70),
    (0b0000010, 980, 78),
    (0b0000011, 261, 42),
    (0b0000100, 1251, 73),
    (0b0000101, 202, 35),
    (0b0000110, 391, 39),
    (0b0000111, 83, 18),
    (0b0001000, 1600, 84),
    (0b0001001, 358, 47),
    (0b0001010, 298, 46),
    (0b0001011, 101, 25),
    (0b0001100, 373, 41),
    (0b0001101, 64, 20),
    (0b0001110, 83, 18),
    (0b0001111, 21, 8),
    (0b0010000, 1385, 73),
    (0b0010001, 314, 45),
    (0b0010010, 374, 39),
    (0b0010011, 110, 25),
    (0b0010100, 456, 48),
    (0b0010101, 88, 25),
    (0b0010110, 160, 24),
    (0b0010111, 39, 13),
    (0b0011000, 415, 41),
    (0b0011001, 123, 26),
    (0b0011010, 80, 18),
    (0b0011011, 34, 12),
    (0b0011100, 95, 22),
    (0b0011101, 23, 11),
    (0b0011110, 20, 8),
    (0b0011111, 6, 4),
    (0b0100000, 1076, 70),
    (0b0100001, 261, 42),
    (0b0100010, 315, 42),
    (0b0100011, 95, 26),
    (0b0100100, 377, 45),
    (0b0100101, 77, 23),
    (0b0100110, 138, 25),
    (0b0100111, 34, 13),
    (0b0101000, 467, 47),
    (0b0101001, 122, 30),
    (0b0101010, 113, 25),
    (0b0101011, 41, 16),
    (0b0101100, 137, 26),
    (0b0101101, 29, 14),
    (0b0101110, 37, 12),
    (0b0101111, 10, 6),
    (0b0110000, 291, 35),
    (0b0110001, 89, 23),
    (0b0110010, 94, 18),
    (0b0110011, 34, 13),
    (0b0110100, 115, 25),
    (0b0110101, 33, 14),
    (0b0110110, 45, 13),
    (0b0110111, 15, 8),
    (0b0111000, 93, 20),
    (0b0111001, 35, 14),
    (0b0111010, 21, 8),
    (0b0111011, 10, 6),
    (0b0111100, 27, 11),
    (0b0111101, 9, 6),
    (0b0111110, 6, 4),
    (0b0111111, 2, 2),
    (0b1000000, 879, 32),
    (0b1000001, 215, 24),
    (0b1000010, 231, 23),
    (0b1000011, 71, 16),
    (0b1000100, 285, 21),
    (0b1000101, 62, 15),
    (0b1000110, 98, 13),
    (0b1000111, 26, 8),
    (0b1001000, 357, 25),
    (0b1001001, 94, 18),
    (0b1001010, 80, 17),
    (0b1001011, 30, 11),
    (0b1001100, 100, 15),
    (0b1001101, 23, 10),
    (0b1001110, 27, 8),
    (0b1001111, 8, 4),
    (0b1010000, 288, 22),
    (0b1010001, 81, 17),
    (0b1010010, 105, 16),
    (0b1010011, 35, 12),
    (0b1010100, 111, 14),
    (0b1010101, 28, 10),
    (0b1010110, 49, 9),
    (0b1010111, 14, 6),
    (0b1011000, 101, 15),
    (0b1011001, 35, 11),
    (0b1011010, 32, 10),
    (0b1011011, 14, 7),
    (0b1011100, 31, 8),
    (0b1011101, 9, 5),
    (0b1011110, 10, 4),
    (0b1011111, 3, 2),
    (0b1100000, 203, 13),
    (0b1100001, 61, 11),
    (0b1100010, 64, 10),
    (0b1100011, 23, 8),
    (0b1100100, 73, 10),
    (0b1100101, 22, 8),
    (0b1100110, 29, 7),
    (0b1100111, 10, 5),
    (0b1101000, 86, 11),
    (0b1101001, 28, 9),
    (0b1101010, 26, 8),
    (0b1101011, 11, 6),
    (0b1101100, 31, 8),
    (0b1101101, 10, 6),
    (0b1101110, 11, 5),
    (0b1101111, 4, 3),
    (0b1110000, 54, 7),
    (0b1110001, 20, 6),
    (0b1110010, 24, 6),
    (0b1110011, 10, 5),
    (0b1110100, 23, 5),
    (0b1110101, 9, 4),
    (0b1110110, 12, 4),
    (0b1110111, 5, 3),
    (0b1111000, 18, 5),
    (0b1111001, 8, 4),
    (0b1111010, 8, 4),
    (0b1111011, 4, 3),
    (0b1111100, 7, 3),
    (0b1111101, 3, 2),
    (0b1111110, 3, 2),
    (0b1111111, 1, 1),
];

pub(crate) const E8: [(u16, u64, u64); 256] = [
    (0b00000000, 25080, 256),
    (0b00000001, 4554, 143),
    (0b00000010, 6188, 124),
    (0b00000011, 1422, 58),
    (0b00000100, 7397, 153),
    (0b00000101, 1121, 79),
    (0b00000110, 2183, 63),
    (0b00000111, 392, 26),
    (0b00001000, 9541, 163),
    (0b00001001, 1981, 85),
    (0b00001010, 1898, 71),
    (0b00001011, 521, 30),
    (0b00001100, 2150, 88),
    (0b00001101, 361, 42),
    (0b00001110, 430, 29),
    (0b00001111, 87, 11),
    (0b00010000, 8691, 153),
    (0b00010001, 1818, 80),
    (0b00010010, 2183, 86),
    (0b00010011, 599, 41),
    (0b00010100, 2786, 88),
    (0b00010101, 484, 40),
    (0b00010110, 873, 45),
    (0b00010111, 186, 18),
    (0b00011000, 2502, 84),
    (0b00011001, 658, 41),
    (0b00011010, 461, 39),
    (0b00011011, 160, 17),
    (0b00011100, 566, 43),
    (0b00011101, 112, 18),
    (0b00011110, 105, 16),
    (0b00011111, 24, 6),
    (0b00100000, 7169, 149),
    (0b00100001, 1554, 85),
    (0b00100010, 2047, 81),
    (0b00100011, 549, 41),
    (0b00100100, 2448, 93),
    (0b00100101, 446, 48),
    (0b00100110, 814, 45),
    (0b00100111, 170, 20),
    (0b00101000, 3039, 99),
    (0b00101001, 741, 53),
    (0b00101010, 689, 49),
    (0b00101011, 218, 23),
    (0b00101100, 815, 55),
    (0b00101101, 161, 26),
    (0b00101110, 187, 22),
    (0b00101111, 42, 9),
    (0b00110000, 1906, 74),
    (0b00110001, 514, 39),
    (0b00110010, 553, 49),
    (0b00110011, 188, 25),
    (0b00110100, 726, 45),
    (0b00110101, 163, 20),
    (0b00110110, 255, 28),
    (0b00110111, 70, 12),
    (0b00111000, 577, 42),
    (0b00111001, 186, 21),
    (0b00111010, 121, 23),
    (0b00111011, 48, 11),
    (0b00111100, 154, 22),
    (0b00111101, 36, 9),
    (0b00111110, 32, 10),
    (0b00111111, 8, 4),
    (0b01000000, 5512, 111),
    (0b01000001, 1260, 65),
    (0b01000010, 1583, 61),
    (0b01000011, 439, 31),
    (0b01000100, 1890, 73),
    (0b01000101, 378, 40),
    (0b01000110, 636, 35),
    (0b01000111, 141, 16),
    (0b01001000, 2365, 79),
    (0b01001001, 598, 45),
    (0b01001010, 580, 39),
    (0b01001011, 182, 19),
    (0b01001100, 668, 47),
    (0b01001101, 143, 25),
    (0b01001110, 161, 18),
    (0b01001111, 37, 8),
    (0b01010000, 2091, 74),
    (0b01010001, 541, 43),
    (0b01010010, 681, 39),
    (0b01010011, 214, 21),
    (0b01010100, 788, 49),
    (0b01010101, 175, 25),
    (0b01010110, 301, 24),
    (0b01010111, 75, 11),
    (0b01011000, 736, 46),
    (0b01011001, 225, 26),
    (0b01011010, 184, 19),
    (0b01011011, 69, 10),
    (0b01011100, 206, 27),
    (0b01011101, 49, 13),
    (0b01011110, 49, 9),
    (0b01011111, 12, 4),
    (0b01100000, 1279, 55),
    (0b01100001, 356, 32),
    (0b01100010, 412, 34),
    (0b01100011, 140, 19),
    (0b01100100, 498, 38),
    (0b01100101, 123, 20),
    (0b01100110, 192, 22),
    (0b01100111, 54, 11),
    (0b01101000, 596, 41),
    (0b01101001, 184, 24),
    (0b01101010, 165, 23),
    (0b01101011, 65, 13),
    (0b01101100, 200, 25),
    (0b01101101, 52, 13),
    (0b01101110, 58, 12),
    (0b01101111, 17, 6),
    (0b01110000, 363, 30),
    (0b01110001, 119, 17),
    (0b01110010, 134, 17),
    (0b01110011, 53, 10),
    (0b01110100, 153, 21),
    (0b01110101, 44, 10),
    (0b01110110, 68, 12),
    (0b01110111, 23, 6),
    (0b01111000, 127, 19),
    (0b01111001, 48, 11),
    (0b01111010, 34, 8),
    (0b01111011, 16, 5),
    (0b01111100, 39, 11),
    (0b01111101, 11, 5),
    (0b01111110, 10, 4),
    (0b01111111, 3, 2),
    (0b10000000, 4452, 121),
    (0b10000001, 961, 71),
    (0b10000010, 1139, 71),
    (0b10000011, 317, 37),
    (0b10000100, 1411, 79),
    (0b10000101, 267, 43),
    (0b10000110, 461, 41),
    (0b10000111, 105, 19),
    (0b10001000, 1787, 85),
    (0b10001001, 433, 48),
    (0b10001010, 388, 45),
    (0b10001011, 130, 22),
    (0b10001100, 463, 50),
    (0b10001101, 98, 26),
    (0b10001110, 112, 21),
    (0b10001111, 29, 9),
    (0b10010000, 1568, 80),
    (0b10010001, 391, 46),
    (0b10010010, 475, 49),
    (0b10010011, 150, 27),
    (0b10010100, 560, 52),
    (0b10010101, 124, 26),
    (0b10010110, 211, 30),
    (0b10010111, 55, 14),
    (0b10011000, 512, 49),
    (0b10011001, 161, 27),
    (0b10011010, 124, 25),
    (0b10011011, 50, 13),
    (0b10011100, 141, 28),
    (0b10011101, 37, 13),
    (0b10011110, 35, 12),
    (0b10011111, 10, 5),
    (0b10100000, 1244, 71),
    (0b10100001, 336, 43),
    (0b10100010, 412, 44),
    (0b10100011, 133, 25),
    (0b10100100, 476, 49),
    (0b10100101, 117, 27),
    (0b10100110, 186, 28),
    (0b10100111, 50, 14),
    (0b10101000, 580, 52),
    (0b10101001, 170, 31),
    (0b10101010, 170, 29),
    (0b10101011, 62, 16),
    (0b10101100, 195, 32),
    (0b10101101, 50, 17),
    (0b10101110, 58, 15),
    (0b10101111, 16, 7),
    (0b10110000, 377, 41),
    (0b10110001, 127, 24),
    (0b10110010, 146, 27),
    (0b10110011, 57, 16),
    (0b10110100, 169, 28),
    (0b10110101, 51, 14),
    (0b10110110, 75, 18),
    (0b10110111, 25, 9),
    (0b10111000, 139, 26),
    (0b10111001, 54, 15),
    (0b10111010, 43, 14),
    (0b10111011, 19, 8),
    (0b10111100, 50, 15),
    (0b10111101, 15, 7),
    (0b10111110, 14, 7),
    (0b10111111, 4, 3),
    (0b11000000, 924, 52),
    (0b11000001, 239, 30),
    (0b11000010, 260, 34),
    (0b11000011, 86, 19),
    (0b11000100, 315, 36),
    (0b11000101, 76, 19),
    (0b11000110, 116, 22),
    (0b11000111, 34, 11),
    (0b11001000, 390, 39),
    (0b11001001, 112, 23),
    (0b11001010, 99, 23),
    (0b11001011, 40, 13),
    (0b11001100, 119, 24),
    (0b11001101, 32, 13),
    (0b11001110, 36, 12),
    (0b11001111, 12, 6),
    (0b11010000, 319, 36),
    (0b11010001, 99, 22),
    (0b11010010, 122, 21),
    (0b11010011, 45, 13),
    (0b11010100, 133, 26),
    (0b11010101, 39, 14),
    (0b11010110, 61, 15),
    (0b11010111, 20, 8),
    (0b11011000, 121, 24),
    (0b11011001, 47, 15),
    (0b11011010, 40, 11),
    (0b11011011, 19, 7),
    (0b11011100, 43, 15),
    (0b11011101, 15, 8),
    (0b11011110, 14, 6),
    (0b11011111, 5, 3),
    (0b11100000, 224, 28),
    (0b11100001, 71, 16),
    (0b11100010, 77, 18),
    (0b11100011, 30, 11),
    (0b11100100, 87, 20),
    (0b11100101, 27, 10),
    (0b11100110, 38, 13),
    (0b11100111, 14, 7),
    (0b11101000, 101, 21),
    (0b11101001, 36, 13),
    (0b11101010, 34, 12),
    (0b11101011, 16, 8),
    (0b11101100, 39, 13),
    (0b11101101, 13, 7),
    (0b11101110, 15, 7),
    (0b11101111, 6, 4),
    (0b11110000, 66, 17),
    (0b11110001, 26, 10),
    (0b11110010, 29, 9),
    (0b11110011, 13, 6),
    (0b11110100, 31, 12),
    (0b11110101, 12, 6),
    (0b11110110, 16, 7),
    (0b11110111, 7, 4),
    (0b11111000, 25, 11),
    (0b11111001, 12, 7),
    (0b11111010, 9, 4),
    (0b11111011, 5, 3),
    (0b11111100, 10, 6),
    (0b11111101, 4, 3),
    (0b11111110, 3, 2),
    (0b11111111, 1, 1),
];
