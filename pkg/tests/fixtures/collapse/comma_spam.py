def ','','','','','','','','','','','','','','',''
