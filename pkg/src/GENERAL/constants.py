import logging


class Constants(frozenset):
    # --- Ядро LoRa (Таблица параметров модели) ---
    BANDWIDTH_HZ_DEF = 125_000.0
    CR_CODE_DEF = 1  # 4/5
    CR_CODES = (1, 2, 3, 4)
    CR_FRACTIONS = {"4/5": 1, "4/6": 2, "4/7": 3, "4/8": 4}
    HEADER_FLAG_DEF = 0  # 0 - заголовок присутствует
    LOW_RATE_OPT_DEF = 0
    N_PREAMBLE_EXTRA_DEF = 6
    PAYLOAD_BYTES_DEF = 20
    PREAMBLE_BASE_SYMBOLS = 4.25
    PAYLOAD_BASE_SYMBOLS = 8
    SF_MAX = 12
    SF_MIN = 6
    SF_ALL = tuple(range(SF_MIN, SF_MAX + 1))

    # --- Канал ---
    ALPHA_DEF = 0.0
    BETA_DEF = 3.5
    HATA_BASE_DB = 44.9
    HATA_HEIGHT_DB = 6.55
    KAPPA_DEF = 0.5
    P_TR_DBM_DEF = 10.0
    SIGMA_DB_DEF = 2.0
    FADING_DEF = "rayleigh"

    # --- Сеть ---
    LAMBDA_T_DEF = 1e-3  # один пакет в 16.666 минут
    N_NODES_DEF = 1000
    NORM_RADIUS_M_DEF = 8000.0

    # --- Пороги чувствительности (dBm), ключ - SF ---
    SENSITIVITY_NOMINAL = {6: -121.0, 7: -124.0, 8: -127.0, 9: -130.0, 10: -133.0, 11: -135.0, 12: -137.0}
    SENSITIVITY_RECOMMENDED = {6: -121.0, 7: -126.0, 8: -129.0, 9: -131.0, 10: -133.0, 11: -135.0, 12: -137.0}
    SENSITIVITY_EQUALIZED = {6: -121.0, 7: -124.0, 8: -127.0, 9: -130.0, 10: -133.0, 11: -134.0, 12: -135.0}
    SENSITIVITY_PRESETS = {
        "nominal": SENSITIVITY_NOMINAL,
        "recommended": SENSITIVITY_RECOMMENDED,
        "equalized": SENSITIVITY_EQUALIZED,
    }
    SENSITIVITY_PRESET_DEF = "nominal"
    LEGAL_SENSITIVITY_DBM = (-137.0, -121.0)  # (нижняя граница не включена, верхняя включена]
    TARGET_PI_DEF = 0.95
    WEAKEST_SFS_EXPECTED = (10, 11, 12)
    WEAKEST_CHECK_NODES = 2000

    # --- Монте-Карло ---
    MC_BLOCK_SIZE = 1000  # не зависит от числа потоков
    MC_MODE_POWER = "power"
    MC_MODE_POWER_LAW = "power_law"
    MC_MODE_SPATIAL = "spatial"
    MC_MODES = (MC_MODE_SPATIAL, MC_MODE_POWER)
    MC_MODE_KEYS = {MC_MODE_SPATIAL: 1, MC_MODE_POWER: 2, MC_MODE_POWER_LAW: 3}
    MC_REPLICATIONS_DEF = 100_000
    MC_SEED_DEF = 20_180_101
    MC_TAIL_EPSILON_DEF = 1e-7
    MC_TAIL_EPSILON_MAX = 0.01
    Z_ORACLE_LIMIT = 4.0
    Z_ORACLE_WARN = 3.0

    # --- Численное интегрирование ---
    QUAD_ATTEMPTS = 3
    QUAD_LIMIT_DEF = 100
    QUAD_Z_CAP = 8.5  # хвост N(0,1) за 8.5 сигм < 1e-16
    QUAD_EXP_TAIL = 1e-16

    # --- Допуски ---
    PI_SELF_CHECK_TOL = 1e-9

    # --- Вывод ---
    CSV_COLUMNS = ("n", "sf", "sensitivity_dbm", "window_s", "pi_analytic")
    CSV_MC_COLUMNS = ("pi_mc", "mc_stderr", "z_score")
    CSV_NA = "NA"
    COMMENT_PREFIX = "# "
    SWEEP_KINDS = ("figure2", "figure3", "figure4")
    FIGURE3_FADINGS = ("none", "rayleigh", "lognormal")
    FIGURE4_ALPHA = -0.2
    NODES_SWEEP_DEF = (100, 2000, 100)

    # --- Коды завершения ---
    EXIT_OK = 0
    EXIT_UNEXPECTED = 1
    EXIT_VALIDATION = 2
    EXIT_ORACLE = 3
    EXIT_NUMERIC = 4
    EXIT_INTERRUPTED = 130

    # --- Переменные окружения ---
    ENV_CONSOLE_LOG_LEVEL = "LORASG_CONSOLE_LOG_LEVEL"
    ENV_FILE_LOG_LEVEL = "LORASG_FILE_LOG_LEVEL"
    ENV_LOG_FILE_PATH = "LORASG_LOG_FILE"
    ENV_PROGRESS = "LORASG_PROGRESS"
    ENV_THREADS = "LORASG_THREADS"
    VARIABLES_DOTENV_NAME_DEF = "env"

    # --- Логирование ---
    CONSOLE_LOG_LEVEL_DEF = "WARNING"
    CONVERT_LOGGING_NAME_TO_CODE = {
        "DEBUG": logging.DEBUG,
        "INFO": logging.INFO,
        "WARNING": logging.WARNING,
        "ERROR": logging.ERROR,
        "CRITICAL": logging.CRITICAL,
    }
    ENCODING = "utf-8"
    FILE_LOG_LEVEL_DEF = "INFO"
    LOG_FORMAT = "%(asctime)s - %(levelname)s - %(module)s:%(lineno)d - %(message)s"
    LOG_LEVEL_FOR_LIBRARIES = logging.WARNING
    NOISY_LIBS = ["numpy", "scipy"]
    ROTATING_BACKUP_COUNT = 3
    ROTATING_MAX_BYTES = 1 * 1024 * 1024  # 1 MB

    # --- Файл сценария ---
    SCENARIO_FILE_DEF = "default_rural.cfg"
    SECTION_CHANNEL = "channel"
    SECTION_CLASSES = "classes"
    SECTION_NETWORK = "network"
    SECTION_RADIO = "radio"
    SECTION_SIM = "sim"
    SECTIONS = (SECTION_NETWORK, SECTION_CHANNEL, SECTION_RADIO, SECTION_CLASSES, SECTION_SIM)
    SCENARIO_KEYS = {
        SECTION_NETWORK: ("n_nodes", "lambda_s", "norm_radius_m", "lambda_t", "alpha"),
        SECTION_CHANNEL: ("beta", "hata_antenna_height_m", "kappa", "p_tr_dbm", "fading", "sigma_db"),
        SECTION_RADIO: ("bw_hz", "n_preamble_extra", "payload_bytes", "header", "low_rate_opt", "cr"),
        SECTION_CLASSES: ("preset",),
        SECTION_SIM: ("replications", "seed", "tail_epsilon", "disk_truncation_m"),
    }
    CLASS_KEY_PREFIX = "sf"
    JSON_SUFFIX = ".json"
    VALIDATE_WINDOW_S_DEF = 1.0
    BELOW_P1_NOTE = (
        "No successful reception (packet loss) is assumed when P_rec(X_i) < P_1; "
        "pi values are conditional on class membership"
    )
