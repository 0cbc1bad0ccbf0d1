#include "gfpca/simulation.hpp"

namespace gfpca {

namespace {

// Deterministic 218-site planar sensor layout used by the us-sensor
// simulation scenario; mirrored in data/us_sensor_coords.csv.
constexpr double kUsSensorCoords[218][2] = {
    {-123.3259, 26.2634}, {-120.0913, 26.6589}, {-116.7960, 26.5167}, {-112.5239, 25.8470},
    {-110.4131, 25.8025}, {-104.8641, 26.2880}, {-103.6199, 26.6082}, {-99.4273, 27.0923},
    {-92.6248, 25.6497}, {-88.3240, 26.6447}, {-84.8784, 26.3959}, {-82.2955, 26.4724},
    {-80.1500, 25.8712}, {-77.0403, 26.6379}, {-72.9632, 25.8344}, {-68.5109, 26.7515},
    {-122.6231, 27.4422}, {-119.8021, 28.1797}, {-115.2430, 28.1503}, {-109.6688, 28.4833},
    {-105.5385, 28.6223}, {-102.4710, 28.0330}, {-98.7357, 28.8117}, {-94.8984, 27.5232},
    {-92.8045, 27.9111}, {-90.1708, 28.6672}, {-85.1110, 28.5781}, {-81.7941, 28.5480},
    {-78.5609, 28.3125}, {-75.2260, 28.6657}, {-71.6773, 27.9678}, {-69.1643, 27.8560},
    {-123.5817, 29.6699}, {-120.4618, 29.8365}, {-115.0001, 30.2383}, {-112.7243, 30.3897},
    {-108.7261, 30.5549}, {-107.1093, 29.7547}, {-101.5418, 29.3686}, {-98.0269, 30.1828},
    {-95.5770, 29.6209}, {-92.8961, 29.2150}, {-89.3850, 30.5234}, {-87.0904, 29.8447},
    {-81.5698, 30.2831}, {-78.8094, 29.4999}, {-75.8004, 30.5263}, {-73.5138, 29.9297},
    {-68.5195, 30.4632}, {-121.9693, 31.7938}, {-120.8451, 32.2549}, {-115.1728, 31.4839},
    {-111.5175, 32.0439}, {-108.5972, 32.0726}, {-105.3037, 31.9552}, {-102.3250, 32.4139},
    {-100.3772, 30.9631}, {-97.2601, 31.5397}, {-93.4609, 31.1479}, {-88.7421, 32.3291},
    {-84.6155, 32.3449}, {-81.7715, 32.4242}, {-80.0912, 31.2618}, {-74.6352, 31.9109},
    {-71.4329, 31.9408}, {-69.6415, 32.2063}, {-123.1727, 32.9031}, {-120.3591, 34.1505},
    {-117.2149, 34.0095}, {-113.4044, 33.5614}, {-109.7046, 33.6719}, {-106.1248, 33.0482},
    {-101.6142, 33.2334}, {-100.6800, 33.8111}, {-96.3213, 33.6352}, {-92.2184, 32.8276},
    {-90.2458, 33.1820}, {-86.8399, 33.7941}, {-83.9735, 33.4374}, {-79.6801, 33.9793},
    {-74.7625, 34.1935}, {-72.4418, 33.6544}, {-69.6995, 33.7196}, {-121.7171, 34.5275},
    {-119.1655, 35.7477}, {-116.3547, 35.1813}, {-112.8388, 35.6025}, {-108.8955, 35.4886},
    {-105.0559, 35.1360}, {-102.2410, 35.9093}, {-99.3947, 34.8309}, {-97.3439, 34.9850},
    {-92.2025, 34.8642}, {-89.8469, 34.5895}, {-86.4931, 34.8120}, {-81.3239, 35.2218},
    {-79.1509, 35.0273}, {-75.5280, 35.4220}, {-71.3978, 35.3665}, {-69.1900, 35.2271},
    {-121.6164, 36.9839}, {-119.1855, 37.6573}, {-116.2515, 37.0467}, {-111.4519, 36.4305},
    {-110.3068, 36.5490}, {-106.9771, 36.5488}, {-102.5270, 37.0045}, {-99.8371, 36.5715},
    {-95.0118, 36.8582}, {-93.7488, 36.4196}, {-88.4136, 37.3717}, {-86.9508, 37.7417},
    {-81.2985, 37.4948}, {-78.6800, 37.4007}, {-77.0472, 36.6809}, {-72.5720, 37.5967},
    {-69.3428, 37.2494}, {-123.3631, 38.8787}, {-120.5296, 38.1092}, {-115.1186, 38.1717},
    {-113.4072, 38.2305}, {-110.4456, 38.4873}, {-106.2259, 38.7813}, {-103.2390, 39.2076},
    {-100.1834, 38.7905}, {-96.6359, 39.3841}, {-93.0063, 38.2360}, {-88.6579, 39.1694},
    {-86.2729, 39.0055}, {-82.1333, 38.3974}, {-78.4867, 38.8954}, {-77.2549, 39.1005},
    {-71.2782, 39.0442}, {-68.4971, 38.7666}, {-121.9596, 40.6064}, {-118.5264, 40.8436},
    {-114.8509, 40.4038}, {-111.7011, 40.2764}, {-109.5154, 40.4907}, {-106.6152, 41.2614},
    {-102.6168, 40.0166}, {-98.4657, 39.9265}, {-95.5573, 41.1545}, {-93.9971, 40.7675},
    {-90.6730, 40.7328}, {-85.9317, 39.9062}, {-82.2429, 40.2016}, {-79.4522, 41.2535},
    {-75.1919, 40.0937}, {-73.8625, 40.2635}, {-123.1633, 42.2158}, {-119.0703, 42.0808},
    {-116.2987, 41.6533}, {-114.0633, 42.3863}, {-108.4124, 41.8491}, {-106.4193, 42.0553},
    {-101.3192, 42.0961}, {-100.0053, 41.5705}, {-97.0880, 42.3424}, {-91.5274, 41.7556},
    {-88.6920, 41.8694}, {-87.1444, 41.9541}, {-83.0405, 42.4192}, {-80.4547, 41.6026},
    {-75.4955, 42.3827}, {-71.9237, 42.3662}, {-69.3078, 42.0394}, {-122.5676, 44.5035},
    {-118.5646, 43.4129}, {-116.4882, 43.8614}, {-113.3067, 44.0140}, {-109.0749, 43.8187},
    {-105.9513, 44.6774}, {-103.1281, 44.5273}, {-100.6746, 44.6653}, {-97.0282, 44.5367},
    {-93.2693, 44.1519}, {-89.1924, 43.9214}, {-86.0493, 44.4244}, {-83.8960, 44.3648},
    {-78.1312, 43.9594}, {-75.0289, 43.5560}, {-73.6851, 43.4127}, {-70.1415, 43.8129},
    {-122.5173, 46.3753}, {-118.6799, 45.2826}, {-115.6161, 45.5649}, {-111.5930, 46.5749},
    {-108.0970, 45.2719}, {-105.0610, 46.3815}, {-101.4388, 46.3770}, {-99.7859, 45.5754},
    {-94.7642, 45.1363}, {-92.8156, 46.4578}, {-88.8027, 45.8465}, {-85.4937, 46.0270},
    {-83.0162, 46.1388}, {-78.7852, 45.8186}, {-75.9367, 46.5141}, {-71.1608, 46.3212},
    {-69.2406, 45.9490}, {-123.8736, 47.9866}, {-120.5104, 48.0775}, {-116.2906, 46.9044},
    {-112.0946, 48.0378}, {-108.3009, 47.2623}, {-106.7871, 46.8992}, {-103.7906, 47.4722},
    {-98.4465, 47.8665}, {-95.7955, 47.5896}, {-92.4004, 47.9802}, {-88.7779, 48.0757},
    {-86.1042, 47.1532}, {-82.2499, 47.2124}, {-79.8417, 47.2352}, {-75.0053, 47.9180},
    {-71.9694, 47.6100}, {-67.9588, 47.1328},
};

}  // namespace

std::vector<std::array<double, 2>> us_sensor_coordinates() {
  std::vector<std::array<double, 2>> coords;
  coords.reserve(218);
  for (const auto& c : kUsSensorCoords) coords.push_back({c[0], c[1]});
  return coords;
}

}  // namespace gfpca
