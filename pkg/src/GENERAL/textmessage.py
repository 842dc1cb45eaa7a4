class TextMessage(frozenset):
    bad_alpha = "Показатель плотности alpha={alpha} должен быть больше -2 (интеграл интенсивности расходится)"
    bad_bandwidth = "Полоса пропускания должна быть положительной: {bw}"
    bad_beta = "Показатель потерь beta={beta} должен быть больше 2"
    bad_classes_empty = "Список классов SF пуст"
    bad_classes_order = "Чувствительности классов должны строго возрастать: {values}"
    bad_classes_sf_order = "SF должен не возрастать с ростом номера класса: {values}"
    bad_coding_rate = "Некорректный coding rate '{value}'. Допустимо 4/5..4/8 или 1..4"
    bad_cr_code = "cr_code={value} вне {{1,2,3,4}}"
    bad_denominator = "Знаменатель SF - 2*DE = {value} должен быть положительным (SF={sf}, DE={de})"
    bad_distance = "Расстояние должно быть положительным: {distance}"
    bad_equivalent_beta = "Эквивалентный показатель beta'={beta} вне допустимой области (> 2)"
    bad_fading_kind = "Неизвестная модель замираний '{kind}'. Допустимо: none, rayleigh, lognormal"
    bad_flag = "Флаг {name}={value} должен быть 0 или 1"
    bad_height = "Высота антенны базовой станции должна быть положительной: {height}"
    bad_index = "Номер класса n={n} вне диапазона 1..{count}"
    bad_kappa = "Константа потерь kappa={kappa} должна быть положительной"
    bad_mc_mode = "Неизвестный режим Монте-Карло '{mode}'. Допустимо: {modes}"
    bad_moment = "Показатель момента s={s} должен быть положительным"
    bad_mw = "Мощность в мВт должна быть положительной: {value}"
    bad_int = "[{section}] {key}='{value}' не является целым числом"
    bad_nonnegative = "Параметр {name}={value} не может быть отрицательным"
    bad_positive = "Параметр {name}={value} должен быть положительным"
    bad_quantile = "Квантиль q={q} должен лежать в (0, 1)"
    bad_replications = "Число репликаций должно быть >= 1: {value}"
    bad_sf = "SF={sf} вне диапазона {sf_min}..{sf_max}"
    bad_sigma = "Для логнормальной модели sigma_db={sigma} должно быть положительным"
    bad_sweep = "Пустой диапазон перебора узлов: {spec}"
    bad_sweep_kind = "Неизвестный тип перебора '{kind}'. Допустимо: {kinds}"
    bad_sweep_sf = "В сценарии нет класса SF{sf}, необходимого для перебора figure3"
    bad_sweep_spec = "Диапазон узлов задаётся как A:B:STEP, получено '{spec}'"
    bad_tail_epsilon = "tail_epsilon={value} должен лежать в (0, {max_value}]"
    bad_target_pi = "Целевая вероятность {value} должна лежать в (0, 1)"
    bad_threads = "Значение {name}='{value}' не является целым >= 1; используется {default}"
    bad_threshold = "Порог {threshold} мВт ниже P_1={p1} мВт в усечённом режиме (смещение не ограничено)"
    bad_window = "Длительность окна должна быть положительной: {value}"
    equalize_infeasible = (
        "Выравнивание на диске радиуса {radius} м невозможно для класса n={n} (SF{sf}): "
        "требуемая масса {required:.6g} превышает предельную {limit:.6g}"
    )
    equalize_zero_a = "Класс n={n} имеет нулевой коэффициент a_n: конечный порог не выравнивает класс без помех"
    env_not_found = "Файл {env} не найден. Текущая директория {dir}"
    file_not_found = "Файл сценария не найден: {path}"
    file_parse_error = "Ошибка разбора файла сценария {path}: {e}"
    key_conflict = "[{section}] заданы одновременно взаимоисключающие ключи {keys}"
    key_missing = "[{section}] отсутствует обязательный ключ: одно из {keys}"
    key_not_number = "[{section}] {key}='{value}' не является числом"
    key_unknown = "[{section}] неизвестный ключ {key}"
    section_unknown = "Неизвестная секция [{section}]. Допустимо: {sections}"
    bad_preset = "[{section}] неизвестный набор порогов '{value}'. Допустимо: {presets}"
    bad_class_key = "[{section}] ключ {key}: номер SF должен быть целым"
    value_invalid = "[{section}] {e}"
    mc_block_done = "Блок {block}/{blocks} класса n={n} ({mode}) завершён"
    mc_start = "Монте-Карло: режим={mode}, класс n={n}, репликаций={replications}, seed={seed}, потоков={workers}"
    mc_truncation = "Радиус усечения {radius:.1f} м ({source})"
    oracle_disagreement = "Расхождение с аналитикой: |z| > {limit} для {cells}"
    oracle_warn = "z-оценка {z:.3f} для {cell} превышает {limit}"
    quad_not_converged = "Квадратура не сошлась (limit={limit}): {warning}"
    quad_failed = "Численное интегрирование не сошлось после {attempts} попыток"
    self_check_failed = "Контрольный пересчёт: отклонение Pi от цели {worst:.3g} превышает {tol:g}"
    scenario_loaded = "Сценарий загружен из {path}: N_nodes={nodes:.6g}, классов={classes}"
    unexpected = "Необработанная ошибка {e}"
    canceled_by_user = "Процесс прерван пользователем"
    validation_failed = "Ошибка проверки входных данных:\n{e}"
    numeric_failed = "Численная ошибка: {e}; диагностика: {diagnostics}"
