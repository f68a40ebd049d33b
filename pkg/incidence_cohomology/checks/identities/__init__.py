SECTION_ID = 4
