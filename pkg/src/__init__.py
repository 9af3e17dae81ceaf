"""
Рабочий стенд для конечно заданных бесконечных графов
"""
